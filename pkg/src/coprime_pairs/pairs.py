"""Counting residue pairs ``(s, t)`` in ``{0..p-1}`` with a fixed sum.

Two sums matter: ``s + t == r`` and ``s + t == p + r`` for ``0 <= r < p``.
One residue (or one per coordinate) is excluded. The closed forms below
are checked against direct enumeration in the test suite.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import ParameterError


class CountVector(NamedTuple):
    """Pair count split into ``s < t`` pairs and the ``s == t`` pair."""

    strict: int
    diagonal: int

    def dot(self, other: tuple[int, int]) -> int:
        return self.strict * other[0] + self.diagonal * other[1]


def step_H(x: int) -> int:
    return 1 if x >= 0 else 0


def ind_zero(x: int) -> int:
    return 1 if x == 0 else 0


def _check_residues(*values: int, p: int | None = None) -> None:
    for v in values:
        if v < 0 or (p is not None and v >= p):
            bound = "" if p is None else f", {p - 1}"
            raise ParameterError(f"residue {v} out of range [0{bound}]")


def kappa(r: int, a: int) -> int:
    """Pairs ``s <= t``, ``s + t == r``, neither equal to ``a``."""
    _check_residues(r, a)
    return r // 2 + 1 - step_H(r - a)


def kappa_bar(r: int, a: int, p: int) -> int:
    """Pairs ``s <= t``, ``s + t == p + r``, neither equal to ``a``."""
    _check_residues(r, a, p=p)
    return (p - r) // 2 - step_H(a - r - 1)


def tau(r: int, a: int) -> int:
    """1 when ``r`` is even and ``r == 2a``: the diagonal pair of the sum
    ``r`` is the excluded residue itself.

    Total on Z; ``r % 2`` floors so negative ``r`` works.
    """
    return (1 - r % 2) * ind_zero(2 * a - r)


def diagonal(r: int, a: int) -> int:
    """1 when the pair ``(r/2, r/2)`` exists and avoids ``a``."""
    return (1 - r % 2) - tau(r, a)


def nu(r: int, a: int) -> CountVector:
    d = diagonal(r, a)
    return CountVector(kappa(r, a) - d, d)


def nu_bar(r: int, a: int, p: int) -> CountVector:
    # shifting by r maps the p + r diagonal onto the same test
    d = diagonal(p - r, a - r)
    return CountVector(kappa_bar(r, a, p) - d, d)


def lambda_count(r: int, a: int, b: int) -> int:
    """Ordered pairs with ``s != a``, ``t != b`` and ``s + t == r``."""
    _check_residues(r, a, b)
    return r + 1 - step_H(r - a) - step_H(r - b) + ind_zero(a + b - r)


def lambda_bar(r: int, a: int, b: int, p: int) -> int:
    """Ordered pairs with ``s != a``, ``t != b`` and ``s + t == p + r``."""
    _check_residues(r, a, b, p=p)
    return (
        p - r - 1
        - step_H(a - r - 1)
        - step_H(b - r - 1)
        + ind_zero(a + b - p - r)
    )
