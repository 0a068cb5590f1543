"""Solving ``delta(k, a*x + b) == c`` for the least nonnegative ``x``.

The coprime case uses the remainder-only form of the extended Euclidean
algorithm: two sequences are run down from ``(k, a0)`` and ``b0`` and the
solution is read off as

    x = delta(k, k * sum_{j<r} b[j+1] / (a[j] * a[j+1]))

where ``a[r] == 1``. The sum is evaluated with exact rationals; it always
comes out integral. Non-coprime equations are divided through by the gcd
first.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from .errors import ParameterError, check_int64
from .residue import check_modulus


class _Equation(NamedTuple):
    k: int
    a: int
    b: int
    c: int


class RemainderEquation(_Equation):
    """``delta(k, a*x + b) == c``."""

    __slots__ = ()

    def __new__(cls, k: int, a: int, b: int, c: int):
        check_modulus(k)
        check_int64(a, b, c)
        if not 0 <= c < k:
            raise ParameterError(f"target residue {c} not in [0, {k - 1}]")
        return super().__new__(cls, k, a, b, c)


@dataclass(frozen=True)
class EuclidTrace:
    a_seq: tuple[int, ...]
    b_seq: tuple[int, ...]
    r: int

    @property
    def gcd(self) -> int:
        return self.a_seq[self.r]


class SolutionSet(NamedTuple):
    solvable: bool
    x0: int | None = None
    period: int | None = None
    count_in_range: int = 0

    def solutions(self) -> list[int]:
        """All solutions in ``[0, k-1]``, ascending."""
        if not self.solvable:
            return []
        return [self.x0 + j * self.period for j in range(self.count_in_range)]


def euclid_trace(k: int, a0: int, b0: int | None = None) -> EuclidTrace:
    """Run the remainder sequences for modulus ``k`` and coefficient ``a0``.

    ``a_seq`` starts ``k, a0`` and continues with successive remainders
    until the next one would be 0, so ``a_seq[r] == gcd(a0, k)``. When
    ``b0`` is given, ``b_seq`` holds ``b[1..r]`` with
    ``b[n] = a[n-1] - delta(a[n-1], b[n-1])``; otherwise it is empty.
    """
    check_modulus(k)
    check_int64(a0)
    if not 1 <= a0 < k:
        raise ParameterError(f"coefficient must satisfy 1 <= a0 < k, got a0={a0}, k={k}")
    if b0 is not None:
        check_int64(b0)
    return _trace(k, a0, b0)


def _trace(k: int, a0: int, b0: int | None) -> EuclidTrace:
    a_seq = [k, a0]
    while True:
        nxt = a_seq[-2] % a_seq[-1]
        if nxt == 0:
            break
        a_seq.append(nxt)
    r = len(a_seq) - 1

    b_seq: list[int] = []
    if b0 is not None:
        b_seq.append(b0)
        for n in range(2, r + 1):
            prev = a_seq[n - 1]
            # may equal prev itself when b[n-1] is a multiple of it
            b_seq.append(prev - b_seq[-1] % prev)
    return EuclidTrace(tuple(a_seq), tuple(b_seq), r)


def _telescoped_sum(k: int, trace: EuclidTrace) -> int:
    a, b = trace.a_seq, trace.b_seq
    num, den = 0, 1
    for j in range(trace.r):
        # num/den += b[j+1] / (a[j] * a[j+1]), kept in lowest terms
        d = a[j] * a[j + 1]
        num = num * d + b[j] * den
        den *= d
        g = gcd(num, den)
        num //= g
        den //= g
    num *= k
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(
            f"non-integral Euclid sum {num}/{den} for k={k}, trace={trace}"
        )
    return q


def minimal_solution_coprime(k: int, a0: int, b0: int) -> int:
    """Least ``x`` in ``[0, k-1]`` with ``delta(k, a0*x) == b0``.

    ``a0`` must be coprime to ``k``; it is reduced mod ``k`` first, so any
    representative is accepted.

    >>> minimal_solution_coprime(13, 5, 4)
    6
    """
    check_modulus(k)
    check_int64(a0, b0)
    if not 0 <= b0 < k:
        raise ParameterError(f"b0 must lie in [0, {k - 1}], got {b0}")
    a0 %= k
    if gcd(a0, k) != 1:
        raise ParameterError(f"gcd({a0}, {k}) != 1")
    return _minimal_coprime(k, a0, b0)


def _minimal_coprime(k: int, a0: int, b0: int) -> int:
    # arguments already validated and reduced: 1 <= a0 < k, gcd == 1
    if a0 == 1 or b0 == 0:
        return b0
    return _telescoped_sum(k, _trace(k, a0, b0)) % k


def _reduce(eq: RemainderEquation) -> tuple[int, int, int, int]:
    k = eq.k
    a = eq.a % k
    target = (eq.c - eq.b) % k
    return k, a, target, gcd(a, k)


def solve(eq: RemainderEquation) -> SolutionSet:
    """Full solution structure of ``eq`` within ``[0, k-1]``."""
    k, a, target, g = _reduce(eq)
    if target % g:
        return SolutionSet(False)
    period = k // g
    if period == 1:
        # a == 0 and target == 0: every x works
        return SolutionSet(True, 0, 1, k)
    x0 = _minimal_coprime(period, a // g, target // g)
    return SolutionSet(True, x0, period, g)


def solve_with_trace(eq: RemainderEquation) -> tuple[SolutionSet, EuclidTrace | None]:
    """Like :func:`solve`, also returning the Euclid trace of the reduced
    coprime equation (``None`` when unsolvable or when the reduced modulus
    is 1)."""
    sol = solve(eq)
    if not sol.solvable or sol.period == 1:
        return sol, None
    k, a, target, g = _reduce(eq)
    return sol, euclid_trace(sol.period, a // g, target // g)
