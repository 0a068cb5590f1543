"""Command-line entry point.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import sys

from .bench import per_call_seconds, run_bench
from .counting import g_closed
from .errors import ParameterError
from .kernels import BACKENDS, get_backend
from .oracle import g_oracle
from .params import compute_params
from .solver import RemainderEquation, solve_with_trace
from .verify import run_verification

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def _prime_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_eval(args) -> int:
    print(g_closed(args.two_n, args.p))
    return EXIT_OK


def cmd_oracle(args) -> int:
    print(g_oracle(args.two_n, args.p))
    return EXIT_OK


def cmd_params(args) -> int:
    print(compute_params(args.p))
    return EXIT_OK


def cmd_solve(args) -> int:
    eq = RemainderEquation(args.k, args.a, args.b, args.c)
    sol, trace = solve_with_trace(eq)
    if not sol.solvable:
        print("no solution")
        return EXIT_OK
    print(f"x0={sol.x0} period={sol.period} count={sol.count_in_range}")
    if args.trace and trace is not None:
        print("a_seq=" + ",".join(map(str, trace.a_seq)))
        print("b_seq=" + ",".join(map(str, trace.b_seq)))
        print(f"r={trace.r}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_even < 2:
        raise ParameterError(f"--max-even must be >= 2, got {args.max_even}")
    report = run_verification(args.max_even, args.primes, args.workers, args.backend)
    print(report.summary())
    for line in report.mismatch_lines():
        print(line)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def write_table(out, max_even: int, p: int, backend: str | None = None) -> None:
    params = compute_params(p)
    values = get_backend(backend).closed_form_range(max_even, p, params.a_p, params.b_p)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["two_n", "g"])
    writer.writerows((2 * i + 2, int(v)) for i, v in enumerate(values))


def cmd_table(args) -> int:
    if args.output:
        with open(args.output, "w", newline="", encoding="ascii") as fh:
            write_table(fh, args.max_even, args.prime, args.backend)
    else:
        write_table(sys.stdout, args.max_even, args.prime, args.backend)
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.max_even < 2:
        raise ParameterError(f"--max-even must be >= 2, got {args.max_even}")
    compute_params(args.prime)
    names = sorted(BACKENDS) if args.backend == "all" else [args.backend]
    for name in names:
        print(run_bench(args.max_even, args.prime, args.samples, name).line())
    for name in names:
        for two_n, sec in per_call_seconds(args.prime, calls=args.calls, backend=name).items():
            print(f"per_call backend={name} two_n={two_n} ns={sec * 1e9:.1f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coprime-pairs",
        description="Count decompositions 2n = h + k with h <= k and gcd(h, 6p) = gcd(k, 6p) = 1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    backends = sorted(BACKENDS)

    p = sub.add_parser("eval", help="closed-form g(2n, p)")
    p.add_argument("two_n", type=int)
    p.add_argument("p", type=int)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("oracle", help="brute-force g(2n, p)")
    p.add_argument("two_n", type=int)
    p.add_argument("p", type=int)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("params", help="excluded residues a(p), b(p)")
    p.add_argument("p", type=int)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("solve", help="least x with (a*x + b) mod k == c")
    for name in ("k", "a", "b", "c"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--trace", action="store_true", help="print the Euclid sequences")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="closed form vs oracle over a grid")
    p.add_argument("--max-even", type=int, required=True)
    p.add_argument("--primes", type=_prime_list, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--backend", choices=backends, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="CSV of g(2n, p) for 2 <= 2n <= max-even")
    p.add_argument("--max-even", type=int, required=True)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--format", choices=["csv"], default="csv")
    p.add_argument("--output", default=None)
    p.add_argument("--backend", choices=backends, default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("bench", help="time closed form against the oracle")
    p.add_argument("--max-even", type=int, required=True)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--calls", type=int, default=20000)
    p.add_argument("--backend", choices=backends + ["all"], default="all")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
