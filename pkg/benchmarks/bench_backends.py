#!/usr/bin/env python3
"""Compiled vs pure-Python kernels on the batch workloads.

    python benchmarks/bench_backends.py [--max-even 20000] [--prime 7]

For each backend, times the closed form over the full even grid and the
oracle over the same grid, and reports the throughput of each.
"""

import argparse
import time

import numpy as np

from coprime_pairs import BACKENDS, compute_params, get_backend


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-even", type=int, default=20000)
    parser.add_argument("--prime", type=int, default=7)
    args = parser.parse_args()

    prm = compute_params(args.prime)
    n_cases = args.max_even // 2
    results = {}
    print(f"grid: 2 <= 2n <= {args.max_even}, p={args.prime} ({n_cases} cases)")
    print(f"{'backend':<10} {'closed (s)':>12} {'oracle (s)':>12} {'closed/case':>14} {'speedup':>10}")
    for name in sorted(BACKENDS):
        kern = get_backend(name)
        closed, tc = timed(kern.closed_form_range, args.max_even, prm.p, prm.a_p, prm.b_p)
        oracle, to = timed(kern.oracle_range, args.max_even, prm.p)
        if not np.array_equal(closed, oracle):
            raise SystemExit(f"{name}: closed form and oracle disagree")
        results[name] = (tc, to)
        print(f"{name:<10} {tc:>12.4f} {to:>12.4f} {tc / n_cases * 1e9:>12.0f}ns {to / tc:>9.0f}x")

    if len(results) == 2:
        (pc, po), (cc, co) = results["python"], results["compiled"]
        print(f"compiled over python: closed form {pc / cc:.0f}x, oracle {po / co:.0f}x")


if __name__ == "__main__":
    main()
