"""Command-line interface.

Subcommands expose the library operations with conventional flag
parsing; the `legacy` subcommand instead reproduces the classic
escape-time scanner byte-for-byte, including its C-style argument
parsing, its usage-then-success quirk, and its exact output format.

Exit codes: 0 success, 1 validation or usage error, 2 internal error.
"""

from __future__ import annotations

import argparse
import math
import re
import sys

from .derivatives import extrema_locations, iterated_derivative
from .fractal import MANDELBROT, EscapeParams, ScanRegion, format_points, scan, scan_raw
from .iteration import (
    ConvergenceError,
    SolverMethod,
    TrigKind,
    cos_range,
    dottie,
    dottie_digits,
    iterate,
    sin_envelope,
)
from .series import iterated_series

_INT_PREFIX = re.compile(r"[ \t\n\r\f\v]*([+-]?\d+)")
_FLOAT_PREFIX = re.compile(
    r"[ \t\n\r\f\v]*([+-]?(?:\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?"
    r"|[iI][nN][fF](?:[iI][nN][iI][tT][yY])?|[nN][aA][nN]))"
)


def _atoi(text: str) -> int:
    """Leading-prefix integer parse; anything unparsable is 0, as in C."""
    m = _INT_PREFIX.match(text)
    return int(m.group(1)) if m else 0


def _atof(text: str) -> float:
    """Leading-prefix float parse; anything unparsable is 0.0, as in C."""
    m = _FLOAT_PREFIX.match(text)
    return float(m.group(1)) if m else 0.0


def _fmt(x: float) -> str:
    """Shortest decimal string that round-trips, capped at 16 significant digits."""
    for precision in range(1, 17):
        s = "%.*g" % (precision, x)
        if float(s) == x:
            return s
    return "%.16g" % x


def _fmt_value(v: complex | float) -> str:
    if isinstance(v, complex):
        sign = "-" if math.copysign(1.0, v.imag) < 0 else "+"
        return f"{_fmt(v.real)}{sign}{_fmt(abs(v.imag))}j"
    return _fmt(v)


def _parse_value(text: str) -> complex | float:
    try:
        return float(text)
    except ValueError:
        pass
    try:
        return complex(text)
    except ValueError:
        raise ValueError(f"{text!r} is neither a real nor a complex number") from None


def _parse_region(text: str) -> tuple[float, float, float, float]:
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError("region must be four comma-separated numbers: x1,y1,x2,y2")
    try:
        x1, y1, x2, y2 = (float(p) for p in parts)
    except ValueError:
        raise ValueError(f"region {text!r} contains a non-numeric entry") from None
    return x1, y1, x2, y2


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that exits 1 on usage errors instead of 2."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _cmd_dottie(args: argparse.Namespace) -> int:
    if args.digits is not None:
        print(dottie_digits(args.digits))
        return 0
    result = dottie(args.tol, SolverMethod(args.method), args.max_iterations)
    decimals = 12
    if 0.0 < args.tol <= 1.0:
        decimals = min(17, max(0, round(-math.log10(args.tol))))
    print(f"{result.value:.{decimals}f}")
    print(f"method: {result.method.value}")
    print(f"iterations: {result.iterations}")
    print(f"residual: {result.residual:.6e}")
    print(f"value: {_fmt(result.value)}")
    return 0


def _cmd_iterate(args: argparse.Namespace) -> int:
    value = iterate(TrigKind.parse(args.f), args.n, args.v)
    print(_fmt_value(value))
    return 0


def _cmd_derivative(args: argparse.Namespace) -> int:
    kind = TrigKind.parse(args.f)
    value = iterated_derivative(kind, args.n, args.x)
    print(_fmt(value))
    if args.check:
        h = 1e-6
        fd = (iterate(kind, args.n, args.x + h) - iterate(kind, args.n, args.x - h)) / (2 * h)
        print(f"finite-difference: {_fmt(fd)}")
        print(f"difference: {abs(value - fd):.3e}")
    return 0


def _cmd_series(args: argparse.Namespace) -> int:
    series = iterated_series(TrigKind.parse(args.f), args.order, args.terms)
    print(" ".join(f"c{k}={_fmt(c)}" for k, c in enumerate(series.coefficients)))
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    kind = TrigKind.parse(args.f)
    if kind is TrigKind.COSINE:
        if args.n == 1:
            lower, upper = -1.0, 1.0
        else:
            bound = cos_range(args.n)
            lower, upper = bound.lower, bound.upper
    else:
        half = sin_envelope(args.n)
        lower, upper = -half, half
    print(f"lower={_fmt(lower)} upper={_fmt(upper)}")
    return 0


def _cmd_extrema(args: argparse.Namespace) -> int:
    for locus in extrema_locations(TrigKind.parse(args.f), args.n, args.periods):
        print(_fmt(locus))
    return 0


def _run_scan(args: argparse.Namespace, mapping) -> int:
    x1, y1, x2, y2 = _parse_region(args.region)
    params = EscapeParams(
        iterations=args.iterations,
        threshold_sq=args.threshold,
        early_exit=args.early_exit,
    )
    region = ScanRegion(complex(x1, y1), complex(x2, y2), args.grid)
    result = scan(region, mapping, params, workers=args.workers)
    sys.stdout.write(format_points(result.points, padded=(args.format == "gnuplot")))
    return 0


def _cmd_julia(args: argparse.Namespace) -> int:
    return _run_scan(args, TrigKind.parse(args.f))


def _cmd_mandelbrot(args: argparse.Namespace) -> int:
    return _run_scan(args, MANDELBROT)


def _add_scan_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--region",
        default="-2.5,-2.5,2.5,2.5",
        help="corners as x1,y1,x2,y2 (default %(default)s)",
    )
    parser.add_argument("--grid", type=int, default=500, help="samples per axis (default %(default)s)")
    parser.add_argument("--iterations", type=int, default=50, help="orbit length (default %(default)s)")
    parser.add_argument(
        "--threshold",
        type=float,
        default=10.0,
        help="escape bound on the squared magnitude (default %(default)s)",
    )
    parser.add_argument(
        "--workers", type=int, default=None, help="scan threads (default: all cores)"
    )
    parser.add_argument(
        "--format",
        choices=("gnuplot", "plain"),
        default="gnuplot",
        help="gnuplot: 25-column aligned; plain: single-space separated",
    )
    parser.add_argument(
        "--early-exit",
        action="store_true",
        help="abandon orbits at the first threshold crossing (approximate, faster)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="trigiter", description="Iterated cosine and sine toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dottie", help="solve cos(x) = x")
    p.add_argument("--tol", type=float, default=1e-12, help="tolerance (default %(default)s)")
    p.add_argument(
        "--method",
        choices=tuple(m.value for m in SolverMethod),
        default=SolverMethod.FIXED_POINT.value,
    )
    p.add_argument("--max-iterations", type=int, default=1000)
    p.add_argument(
        "--digits",
        type=int,
        default=None,
        help="print this many digits via extended precision instead (max 64)",
    )
    p.set_defaults(func=_cmd_dottie)

    p = sub.add_parser("iterate", help="apply cos or sin n times")
    p.add_argument("--f", required=True, choices=("cos", "sin"))
    p.add_argument("--n", required=True, type=int, help="iteration count")
    p.add_argument("--v", type=_parse_value, default=0.0, help="start value (real or complex)")
    p.set_defaults(func=_cmd_iterate)

    p = sub.add_parser("derivative", help="closed-form iterate derivative")
    p.add_argument("--f", required=True, choices=("cos", "sin"))
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--x", required=True, type=float)
    p.add_argument("--check", action="store_true", help="print a finite-difference cross-check")
    p.set_defaults(func=_cmd_derivative)

    p = sub.add_parser("series", help="Maclaurin coefficients of an iterate")
    p.add_argument("--f", required=True, choices=("cos", "sin"))
    p.add_argument("--order", required=True, type=int, help="iteration count")
    p.add_argument("--terms", required=True, type=int, help="truncation order")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("bounds", help="range of an iterate")
    p.add_argument("--f", required=True, choices=("cos", "sin"))
    p.add_argument("--n", required=True, type=int)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("extrema", help="extrema loci of an iterate")
    p.add_argument("--f", required=True, choices=("cos", "sin"))
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--periods", type=int, default=1, help="half-width in multiples of pi")
    p.set_defaults(func=_cmd_extrema)

    p = sub.add_parser("julia", help="escape-time scan of a trig map")
    p.add_argument("--f", required=True, choices=("cos", "sin"))
    _add_scan_flags(p)
    p.set_defaults(func=_cmd_julia)

    p = sub.add_parser("mandelbrot", help="escape-time scan of z*z + c")
    _add_scan_flags(p)
    p.set_defaults(func=_cmd_mandelbrot)

    sub.add_parser(
        "legacy",
        help="classic scanner: legacy x1 y1 x2 y2 grid cos|sin",
        add_help=False,
    )
    return parser


def _run_legacy(args: list[str]) -> int:
    # Arguments are consumed exactly as the classic program did: C-style
    # numeric parsing, raw argument echoed in the grid error, usage to
    # stdout with a success exit when arguments are missing.
    if len(args) < 6:
        sys.stdout.write("Usage: trigiter legacy x1 y1 x2 y2 grid cos|sin\n")
        return 0
    x1, y1, x2, y2 = (_atof(s) for s in args[:4])
    grid_text = args[4]
    name = args[5]
    grid = _atoi(grid_text)
    if grid < 2:
        print(f"Grid ({grid_text}) must be >= 2", file=sys.stderr)
        return 1
    if name not in ("sin", "cos"):
        print(f"Type sin or cos but not {name}", file=sys.stderr)
        return 1
    kind = TrigKind.COSINE if name == "cos" else TrigKind.SINE
    result = scan_raw(x1, y1, x2, y2, grid, kind)
    sys.stdout.write(format_points(result.points))
    return 0


# Flags whose values may begin with a dash yet are not plain negative
# numbers (comma-joined regions, complex literals).  argparse would read
# such values as option strings, so they are merged into --flag=value form.
_DASHED_VALUE_FLAGS = ("--region", "--v")
_DASHED_VALUE = re.compile(r"-[\d.]")


def _merge_dashed_values(argv: list[str]) -> list[str]:
    merged = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if (
            token in _DASHED_VALUE_FLAGS
            and i + 1 < len(argv)
            and _DASHED_VALUE.match(argv[i + 1])
        ):
            merged.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        merged.append(token)
        i += 1
    return merged


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    if argv and argv[0] == "legacy":
        try:
            return _run_legacy(argv[1:])
        except Exception as exc:  # mirror the classic catch-all
            print(f"internal error: {exc}", file=sys.stderr)
            return 2
    parser = _build_parser()
    args = parser.parse_args(_merge_dashed_values(argv))
    try:
        return args.func(args)
    except (ValueError, ConvergenceError) as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except Exception as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
