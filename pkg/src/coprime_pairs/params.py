"""Excluded residues for the prime ``p``.

Integers coprime to 6 are ``6x+1`` or ``6x+5``. Such an integer is a
multiple of ``p`` exactly when ``x mod p`` hits one particular residue:
``a_p`` for the ``6x+1`` family, ``b_p`` for ``6x+5``. Both follow from
``p mod 6`` in closed form, and ``a_p + b_p + 1 == p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import ParameterError, check_int64


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class PrimeParams:
    p: int
    delta6: int
    M: int
    a_p: int
    b_p: int

    def __str__(self) -> str:
        return f"p={self.p} delta6={self.delta6} M={self.M} a={self.a_p} b={self.b_p}"


def check_prime(p: int) -> int:
    check_int64(p)
    if p < 5 or not is_prime(p):
        raise ParameterError(f"p must be a prime >= 5, got {p}")
    return p


def compute_params(p: int) -> PrimeParams:
    """Closed-form exclusion residues for ``p``.

    >>> str(compute_params(7))
    'p=7 delta6=1 M=1 a=1 b=5'
    """
    check_prime(p)
    delta6 = p % 6
    M = (5 - delta6) // 4
    # exact: p = 1 (mod 6) when M == 1, 5p = 1 (mod 6) when M == 0
    a_p = (p - 1) // 6 * M + (5 * p - 1) // 6 * (1 - M)
    return PrimeParams(p, delta6, M, a_p, p - 1 - a_p)


def f_selector(params: PrimeParams, n_mod3: int) -> int:
    """Excluded residue for same-family sums: ``a_p`` for n = 1 (mod 3),
    ``b_p`` for n = 2 (mod 3)."""
    if n_mod3 == 1:
        return params.a_p
    if n_mod3 == 2:
        return params.b_p
    raise ParameterError(f"n_mod3 must be 1 or 2, got {n_mod3}")
