"""Canonical remainder operator on all of Z.

``delta(k, a)`` is ``a - k*floor(a/k)``: always in ``[0, k-1]``, including
for negative ``a``. Python's ``%`` already floors, which is exactly the
semantics needed; the helpers here add argument checking and the
negation identity.
"""

from .errors import ParameterError, check_int64


def check_modulus(k: int) -> int:
    check_int64(k)
    if k < 2:
        raise ParameterError(f"modulus must be >= 2, got {k}")
    return k


def delta(k: int, a: int) -> int:
    """Least nonnegative residue of ``a`` modulo ``k``.

    >>> delta(5, 12), delta(7, -3)
    (2, 4)
    """
    check_modulus(k)
    check_int64(a)
    return a % k


def delta_neg(k: int, a: int) -> int:
    """Residue of ``-a`` computed as ``k - delta(k, a)``.

    Only valid when ``a`` is not a multiple of ``k``; in that case the
    residue of ``-a`` is simply 0 and callers should not be here.
    """
    r = delta(k, a)
    if r == 0:
        raise ParameterError(f"delta_neg needs delta({k}, {a}) != 0")
    return k - r
