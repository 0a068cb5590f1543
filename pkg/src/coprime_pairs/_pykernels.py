"""Pure-Python batch kernels; used when the compiled extension is absent."""

import numpy as np

from .counting import g_closed
from .oracle import g_oracle
from .params import PrimeParams


def closed_form_one(two_n, p, a_p, b_p):
    params = PrimeParams(p, p % 6, (5 - p % 6) // 4, a_p, b_p)
    return g_closed(two_n, p, params)


def oracle_one(two_n, p):
    return g_oracle(two_n, p)


def closed_form_range(max_even, p, a_p, b_p):
    params = PrimeParams(p, p % 6, (5 - p % 6) // 4, a_p, b_p)
    out = np.zeros(max(max_even // 2, 0), dtype=np.int64)
    for i in range(out.shape[0]):
        out[i] = g_closed(2 * i + 2, p, params)
    return out


def oracle_range(max_even, p):
    out = np.zeros(max(max_even // 2, 0), dtype=np.int64)
    for i in range(out.shape[0]):
        out[i] = g_oracle(2 * i + 2, p)
    return out
