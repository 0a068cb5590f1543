"""Constant-time evaluation of ``g(2n, p)``.

``g(2n, p)`` counts pairs ``h <= k`` of positive integers with
``h + k == 2n`` and both coprime to ``6p``. Writing the summands as
``6z+1`` / ``6z+5`` turns the problem into counting ``z1 + z2 == m(n)``
with one excluded residue mod ``p`` per coordinate. Residue pairs come
from :mod:`.pairs`; each lifts to a number of ``(x1, x2)`` block pairs
that depends only on ``omega = m(n) // p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import ParameterError, check_int64
from .pairs import lambda_bar, lambda_count, nu, nu_bar
from .params import PrimeParams, compute_params, f_selector

_H = (3, 1, 5)


def selector_h(x: int) -> int:
    """Constant term of the decomposition type: 3, 1, 5 for x = 0, 1, 2."""
    if x not in (0, 1, 2):
        raise ParameterError(f"selector_h expects 0, 1 or 2, got {x}")
    return _H[x]


@dataclass(frozen=True)
class CaseData:
    n: int
    n_mod3: int
    m: int
    r: int
    omega: int


class LiftVector(NamedTuple):
    """``(total, half)`` lift counts; ``half`` applies to diagonal pairs."""

    total: int
    half: int


def eta(omega: int) -> LiftVector:
    return LiftVector(omega + 1, omega // 2 + 1)


def eta_bar(omega: int) -> LiftVector:
    return LiftVector(omega, (omega - 1) // 2 + 1)


def case_data(n: int, p: int) -> CaseData:
    check_int64(n, p)
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    n_mod3 = n % 3
    m, rem = divmod(n - _H[n_mod3], 3)
    if rem:
        raise ArithmeticError(f"m({n}) is not an integer")
    # floor semantics: m is negative for n < h(n mod 3)
    omega, r = divmod(m, p)
    return CaseData(n, n_mod3, m, r, omega)


def q_same(cd: CaseData, params: PrimeParams) -> int:
    """Count when both summands share a class mod 6 (n = 1, 2 mod 3)."""
    f = f_selector(params, cd.n_mod3)
    p = params.p
    return (
        nu(cd.r, f).dot(eta(cd.omega))
        + nu_bar(cd.r, f, p).dot(eta_bar(cd.omega))
    )


def q_mixed(cd: CaseData, params: PrimeParams) -> int:
    """Count when one summand is 1 and the other 5 mod 6 (n = 0 mod 3)."""
    if cd.n_mod3 != 0:
        raise ParameterError(f"q_mixed needs n = 0 (mod 3), got n={cd.n}")
    a, b, p = params.a_p, params.b_p, params.p
    return (cd.omega + 1) * lambda_count(cd.r, a, b) + cd.omega * lambda_bar(cd.r, a, b, p)


def check_even(two_n: int) -> int:
    check_int64(two_n)
    if two_n < 2 or two_n % 2:
        raise ParameterError(f"expected a positive even integer, got {two_n}")
    return two_n


def g_closed(two_n: int, p: int, params: PrimeParams | None = None) -> int:
    """Number of coprime-to-``6p`` decompositions ``two_n = h + k``, ``h <= k``.

    Pass a precomputed ``params`` to skip the primality check and the
    residue computation on repeated calls.

    >>> g_closed(26, 5)
    2
    """
    check_even(two_n)
    if params is None:
        params = compute_params(p)
    elif params.p != p:
        raise ParameterError(f"params are for p={params.p}, not {p}")
    cd = case_data(two_n // 2, p)
    if cd.n_mod3 == 0:
        return q_mixed(cd, params)
    return q_same(cd, params)
