"""Timing of closed-form evaluation against the oracle."""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .kernels import DEFAULT, get_backend
from .params import compute_params


@dataclass
class BenchResult:
    backend: str
    evaluations: int
    closed_total: float
    oracle_total: float

    @property
    def speedup(self) -> float:
        if self.closed_total <= 0:
            return float("inf")
        return self.oracle_total / self.closed_total

    def line(self) -> str:
        return (
            f"backend={self.backend} evals={self.evaluations} "
            f"closed_total={self.closed_total:.6f}s oracle_total={self.oracle_total:.6f}s "
            f"speedup={self.speedup:.1f}x"
        )


def sample_grid(max_even: int, samples: int) -> list[int]:
    """Up to ``samples`` even values spread evenly over ``[2, max_even]``.

    Uses the full grid when it is small enough.
    """
    top = max_even // 2
    if top <= samples:
        return [2 * i for i in range(1, top + 1)]
    halves = np.unique(np.linspace(1, top, samples).round().astype(np.int64))
    return [2 * int(h) for h in halves]


def run_bench(max_even: int, p: int, samples: int = 100, backend: str | None = None) -> BenchResult:
    kern = get_backend(backend)
    params = compute_params(p)
    grid = sample_grid(max_even, samples)

    t0 = time.perf_counter()
    closed = [kern.closed_form_one(t, p, params.a_p, params.b_p) for t in grid]
    t1 = time.perf_counter()
    oracle = [kern.oracle_one(t, p) for t in grid]
    t2 = time.perf_counter()
    if closed != oracle:
        # timings over disagreeing paths are meaningless
        raise AssertionError("closed form and oracle disagree on the bench grid")
    return BenchResult(backend or DEFAULT, len(grid), t1 - t0, t2 - t1)


def per_call_seconds(
    p: int,
    two_ns: tuple[int, ...] = (10**3, 10**6, 10**9),
    calls: int = 20000,
    backend: str | None = None,
) -> dict[int, float]:
    """Mean wall time of one closed-form call at each ``two_n`` (best of 3)."""
    kern = get_backend(backend)
    params = compute_params(p)
    f = kern.closed_form_one
    out = {}
    for two_n in two_ns:
        best = float("inf")
        for _ in range(3):
            t0 = time.perf_counter()
            for _ in range(calls):
                f(two_n, p, params.a_p, params.b_p)
            best = min(best, time.perf_counter() - t0)
        out[two_n] = best / calls
    return out

