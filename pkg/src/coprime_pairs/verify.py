"""Grid comparison of the closed form against the oracle."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .kernels import DEFAULT, get_backend
from .params import compute_params


@dataclass
class VerificationReport:
    max_even: int
    primes: list[int]
    cases_checked: int = 0
    # (two_n, p, closed, oracle), sorted by (p, two_n)
    mismatches: list[tuple[int, int, int, int]] = field(default_factory=list)
    elapsed_closed: float = 0.0
    elapsed_oracle: float = 0.0
    backend: str = ""

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        primes = ",".join(map(str, self.primes))
        lines = [
            f"max_even={self.max_even} primes={primes} backend={self.backend}",
            f"cases={self.cases_checked} mismatches={len(self.mismatches)}",
            f"closed_time={self.elapsed_closed:.3f}s oracle_time={self.elapsed_oracle:.3f}s",
            "result=" + ("PASS" if self.ok else "FAIL"),
        ]
        return "\n".join(lines)

    def mismatch_lines(self) -> list[str]:
        return [
            f"mismatch two_n={t} p={p} closed={c} oracle={o}"
            for t, p, c, o in self.mismatches
        ]


def _check_prime_shard(args):
    max_even, p, backend = args
    kern = get_backend(backend)
    params = compute_params(p)
    t0 = time.perf_counter()
    closed = kern.closed_form_range(max_even, p, params.a_p, params.b_p)
    t1 = time.perf_counter()
    oracle = kern.oracle_range(max_even, p)
    t2 = time.perf_counter()
    bad = [
        (2 * i + 2, p, int(closed[i]), int(oracle[i]))
        for i in (closed != oracle).nonzero()[0]
    ]
    return p, len(closed), bad, t1 - t0, t2 - t1


def run_verification(
    max_even: int,
    primes: list[int],
    workers: int = 1,
    backend: str | None = None,
) -> VerificationReport:
    """Compare closed form and oracle for every even ``2 <= two_n <= max_even``
    and every prime. Shards by prime; output is independent of ``workers``."""
    for p in primes:
        compute_params(p)  # validates
    report = VerificationReport(max_even, list(primes), backend=backend or DEFAULT)
    jobs = [(max_even, p, backend) for p in primes]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_prime_shard, jobs))
    else:
        results = [_check_prime_shard(j) for j in jobs]
    for _, n_cases, bad, tc, to in results:
        report.cases_checked += n_cases
        report.mismatches.extend(bad)
        report.elapsed_closed += tc
        report.elapsed_oracle += to
    report.mismatches.sort(key=lambda m: (m[1], m[0]))
    return report

