"""Command-line entry point.

Exit codes: 0 success, 1 a check failed (or a sum was inconclusive),
2 usage error.
"""
from __future__ import annotations

import argparse
import math
import sys
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Optional, Sequence

from .bernoulli import bernoulli, bernoulli_second
from .exact import format_rational, parse_rational

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _rational(text: str) -> Fraction:
    """Accepts "p/q", integers and decimals such as 0.3 or 1e-2, exactly."""
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return Fraction(Decimal(text))
    except (InvalidOperation, ValueError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="borelzeta",
                                description="Bernoulli numbers, zeta values and Borel sums.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    b = sub.add_parser("bernoulli", help="exact Bernoulli number")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--kind", choices=("first", "second"), default="first")

    z = sub.add_parser("zeta", help="zeta at an integer")
    z.add_argument("--n", type=int, required=True)
    z.add_argument("--method", choices=("series", "euler", "exact-nonpos"))
    z.add_argument("--digits", type=int, default=15)

    s = sub.add_parser("borel-sum", help="Borel sum of a registry kernel")
    s.add_argument("--kernel", required=True)
    s.add_argument("--z", type=_rational, required=True)
    s.add_argument("--tol", type=_positive_float, default=1e-10)
    s.add_argument("--digits", type=int, default=15)

    l = sub.add_parser("laurent", help="Laurent vector arithmetic")
    l.add_argument("--op", choices=("mul", "add"), required=True)
    l.add_argument("--lhs", required=True)
    l.add_argument("--rhs", required=True)

    v = sub.add_parser("verify", help="run the verification catalogue")
    v.add_argument("--suite", default="*", help="glob over case ids")
    v.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    v.add_argument("--out")
    v.add_argument("--config")
    v.add_argument("--digits", type=int, dest="precision_digits")
    v.add_argument("--quad-tol", type=_positive_float, dest="quad_tol")
    v.add_argument("--series-terms", type=int, dest="series_terms")
    v.add_argument("--bernoulli-cache", dest="bernoulli_cache_path")
    return p


def _cmd_bernoulli(args) -> int:
    if args.n < 0:
        print("error: --n must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    f = bernoulli if args.kind == "first" else bernoulli_second
    print(format_rational(f(args.n)))
    return EXIT_OK


def _cmd_zeta(args) -> int:
    from .zeta import zeta_even_exact, zeta_nonpos_exact, zeta_pos_ref

    n = args.n
    method = args.method or ("exact-nonpos" if n <= 0 else "series")
    if n == 1:
        print("error: zeta has a pole at 1", file=sys.stderr)
        return EXIT_USAGE
    if method == "exact-nonpos":
        if n > 0:
            print("error: exact-nonpos needs --n <= 0", file=sys.stderr)
            return EXIT_USAGE
        print(format_rational(zeta_nonpos_exact(-n)))
        return EXIT_OK
    if n < 2:
        print(f"error: method {method} needs --n >= 2", file=sys.stderr)
        return EXIT_USAGE
    if method == "euler":
        if n % 2:
            print("error: Euler's formula covers even n only", file=sys.stderr)
            return EXIT_USAGE
        q, k = zeta_even_exact(n)
        print(f"{format_rational(q)} * pi^{k}")
    print(zeta_pos_ref(n, args.digits))
    return EXIT_OK


def _fmt_to_tol(value, tol: float) -> str:
    """Decimal places implied by tol, trailing zeros dropped (0.5, not 0.500000)."""
    d = max(0, math.ceil(-math.log10(tol)))
    if isinstance(value, float):
        s = f"{value:.{d}f}"
    else:
        import mpmath
        s = mpmath.nstr(value, d + 2, min_fixed=-math.inf, max_fixed=math.inf)
    if "." in s and "e" not in s:
        s = s.rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _cmd_borel_sum(args) -> int:
    from .borel import Status, borel_sum, get_kernel

    try:
        kernel = get_kernel(args.kernel)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    r = borel_sum(kernel, args.z, args.tol, args.digits)
    if r.status is Status.SUMMABLE:
        print(_fmt_to_tol(r.value, args.tol))
        return EXIT_OK
    if r.status is Status.NOT_SUMMABLE:
        print("NotSummable")
        return EXIT_OK
    print(f"Inconclusive: {r.reason}")
    return EXIT_FAIL


def _cmd_laurent(args) -> int:
    from .laurent import format_vec, laurent_mul, linear_combine, parse_vec

    try:
        f, g = parse_vec(args.lhs), parse_vec(args.rhs)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = laurent_mul(f, g) if args.op == "mul" else linear_combine(1, f, 1, g)
    print(format_vec(out))
    return EXIT_OK


def _cmd_verify(args) -> int:
    from .verify import UsageError, emit_report, load_config, run_suite

    try:
        cfg = load_config(args.config, precision_digits=args.precision_digits,
                          quad_tol=args.quad_tol, series_terms=args.series_terms,
                          bernoulli_cache_path=args.bernoulli_cache_path)
        report = run_suite(args.suite, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        emit_report(report, args.format, args.out)
    except OSError as exc:
        print(f"error: cannot write report: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK if report.ok else EXIT_FAIL


_COMMANDS = {
    "bernoulli": _cmd_bernoulli,
    "zeta": _cmd_zeta,
    "borel-sum": _cmd_borel_sum,
    "laurent": _cmd_laurent,
    "verify": _cmd_verify,
}


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    return _COMMANDS[args.command](args)


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
