"""Command-line front end: run verification suites and poke at the
individual evaluators without writing any Python.

Exit codes: 0 all pass, 1 at least one failing row, 2 usage or domain
error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .curves import WeierstrassCurve, ap
from .gfunc import GParams, eval_G
from .modforms import newform_coeffs
from .padic import DomainError, PrecisionError
from .pgamma import gamma_p
from .report import emit_report
from .suites import SUITE_NAMES, run_suite
from .truncated import trunc_sum


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padichyper",
        description="exact p-adic hypergeometric evaluation and identity "
                    "verification over prime ranges")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify",
                       help="run one identity suite over a prime range")
    v.add_argument("suite", choices=SUITE_NAMES)
    v.add_argument("--pmin", type=int, required=True)
    v.add_argument("--pmax", type=int, required=True)
    v.add_argument("--prec", type=int, default=None,
                   help="p-adic digits (default: per-suite)")
    v.add_argument("--format", dest="fmt", default="summary",
                   choices=("json", "csv", "summary"))
    v.add_argument("--threads", type=int, default=1,
                   help="worker processes, one prime per task")

    g = sub.add_parser("gamma", help="p-adic gamma value at a rational")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--prec", type=int, default=2)
    g.add_argument("--x", type=Fraction, required=True)

    e = sub.add_parser("geval",
                       help="hypergeometric value at a rational argument")
    e.add_argument("--p", type=int, required=True)
    e.add_argument("--prec", type=int, default=2)
    e.add_argument("--upper", required=True, help="comma-separated rationals")
    e.add_argument("--lower", required=True, help="comma-separated rationals")
    e.add_argument("--t", type=Fraction, required=True)

    a = sub.add_parser("ap", help="Frobenius trace of a Weierstrass curve")
    a.add_argument("--p", type=int, required=True)
    a.add_argument("--curve", required=True, help="a1,a2,a3,a4,a6")

    f = sub.add_parser("fourier", help="newform q-expansion coefficients")
    f.add_argument("--form", choices=("a", "b", "c"), required=True)
    f.add_argument("--limit", type=int, required=True)

    t = sub.add_parser("trunc", help="truncated sum, centered mod p^2")
    t.add_argument("--kind", choices=("eq1", "eq2", "eq3", "eq4"),
                   required=True)
    t.add_argument("--p", type=int, required=True)
    return parser


def _run(args) -> int:
    if args.command == "verify":
        rows = run_suite(args.suite, args.pmin, args.pmax,
                         prec=args.prec, threads=args.threads)
        _, nfail, _ = emit_report(rows, args.fmt)
        return 1 if nfail else 0
    if args.command == "gamma":
        print(gamma_p(args.x, args.p, args.prec))
        return 0
    if args.command == "geval":
        params = GParams.of(args.upper.split(","), args.lower.split(","))
        num, den = args.t.numerator, args.t.denominator
        if den % args.p == 0:
            raise DomainError("argument denominator divisible by p")
        t = num * pow(den, -1, args.p) % args.p
        print(eval_G(params, t, args.p, args.prec))
        return 0
    if args.command == "ap":
        coeffs = [int(c) for c in args.curve.split(",")]
        if len(coeffs) != 5:
            raise ValueError("curve needs exactly a1,a2,a3,a4,a6")
        print(ap(WeierstrassCurve(*coeffs), args.p))
        return 0
    if args.command == "fourier":
        coeffs = newform_coeffs(args.form, args.limit)
        for n in range(1, args.limit + 1):
            print(n, coeffs[n])
        return 0
    print(trunc_sum(args.kind, args.p))
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _run(args)
    except (DomainError, PrecisionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
