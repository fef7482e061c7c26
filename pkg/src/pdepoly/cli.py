"""Command-line interface.

Subcommands: ``solve``, ``solve-rhs``, ``matrix``, ``dim``, ``verify``.

Exit codes:
  0  success (including a trivial solution space)
  2  parse / usage error
  3  dimension or arity mismatch
  4  inconsistent linear system (forced degree cap too small)
  5  predicted and computed dimensions disagree
  6  verification failed
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import List, Optional, Sequence

from .builder import build_full
from .errors import (
    ArityMismatch,
    DegreeExceedsCap,
    DimensionMismatch,
    Inconsistent,
    ParseError,
    ZeroPolynomial,
)
from .parser import ParseContext, default_variables, parse_operator, parse_point, parse_poly
from .render import (
    format_poly,
    latex_space,
    matrix_to_csv,
    matrix_to_json,
    report_to_json,
    space_from_json,
    space_to_json,
    format_space,
)
from .solver import (
    homogeneous_solutions,
    predicted_dimension,
    rhs_solve,
    system_solutions,
    verify,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_INCONSISTENT = 4
EXIT_DIM_MISMATCH = 5
EXIT_VERIFY = 6


class _Failure(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _context(args, d: int) -> ParseContext:
    if args.vars:
        names = tuple(v.strip() for v in args.vars.split(",") if v.strip())
        if len(names) != d:
            raise ArityMismatch(f"--vars lists {len(names)} variables but the root has {d}")
    else:
        names = default_variables(d)
    return ParseContext(names, "operator" if args.operator else "symbol")


def _parse_equation(text: str, ctx: ParseContext):
    if ctx.mode == "operator":
        return parse_operator(text, ctx)
    return parse_poly(text, ctx)


def _inputs(args):
    root = parse_point(args.root)
    ctx = _context(args, len(root))
    return root, ctx


def _emit(text: str, out):
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def _render_space(space, ctx, fmt):
    if fmt == "json":
        return space_to_json(space, ctx.variables)
    if fmt == "latex":
        return latex_space(space, ctx.variables)
    return format_space(space, ctx.variables)


def cmd_solve(args, out) -> int:
    root, ctx = _inputs(args)
    Ps = [_parse_equation(t, ctx) for t in args.equations]
    if len(Ps) == 1:
        space = homogeneous_solutions(Ps[0], root, args.degree)
    else:
        space = system_solutions(Ps, root, args.degree)
    _emit(_render_space(space, ctx, args.format), out)
    return EXIT_OK


def cmd_solve_rhs(args, out) -> int:
    root, ctx = _inputs(args)
    P = _parse_equation(args.equation, ctx)
    F = parse_poly(args.rhs, ctx.variables)
    space = rhs_solve(P, F, root, args.degree)
    _emit(_render_space(space, ctx, args.format), out)
    return EXIT_OK


def cmd_matrix(args, out) -> int:
    root, ctx = _inputs(args)
    P = _parse_equation(args.equation, ctx)
    built = build_full(P, root, args.degree)
    M = built.matrix
    extra = {"degree_cap": args.degree}
    if args.block:
        k, K = args.block
        M = built.block(k, K)
        extra["block"] = [k, K]
    if args.format == "json":
        _emit(matrix_to_json(M, **extra), out)
    else:
        _emit(matrix_to_csv(M), out)
    return EXIT_OK


def cmd_dim(args, out) -> int:
    root, ctx = _inputs(args)
    P = _parse_equation(args.equation, ctx)
    report = predicted_dimension(P, root, args.degree)
    if args.format == "json":
        _emit(report_to_json(report), out)
    else:
        _emit(f"m={report.least_order}, predicted={report.predicted}, computed={report.computed}", out)
    if not report.consistent:
        raise _Failure(EXIT_DIM_MISMATCH, "predicted and computed dimensions disagree")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.solution == "-":
        text = sys.stdin.read()
    else:
        with open(args.solution, encoding="utf-8") as fh:
            text = fh.read()
    try:
        space, names = space_from_json(text)
    except (ValueError, KeyError) as exc:
        raise _Failure(EXIT_PARSE, f"cannot read solution document: {exc}") from exc
    if args.vars:
        names = tuple(v.strip() for v in args.vars.split(","))
    ctx = ParseContext(names, "operator" if args.operator else "symbol")
    Ps = [_parse_equation(t, ctx) for t in args.equations]
    F = parse_poly(args.rhs, names) if args.rhs else None
    result = verify(space, Ps, F)
    _emit("verified" if result else f"FAILED: {result.message}", out)
    if not result:
        raise _Failure(EXIT_VERIFY, result.message)
    return EXIT_OK


def _common(p: argparse.ArgumentParser, degree_required=True):
    p.add_argument("--root", required=True, help='point x0, e.g. "(1,i)"')
    if degree_required:
        p.add_argument("--degree", "-L", type=int, required=True, help="degree cap L")
    p.add_argument("--vars", help="comma-separated variable names (default x,y,z or x1..xd)")
    p.add_argument(
        "--operator", action="store_true",
        help="read equations as operators in Dx, Dy, ... and I instead of symbols",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pdepoly",
        description="Exact polynomial-exponential solutions of constant-coefficient PDEs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="homogeneous solutions of one equation or a system")
    p.add_argument("equations", nargs="+", help="symbol(s) P with L = P(-iD)")
    _common(p)
    p.add_argument("--format", choices=("plain", "json", "latex"), default="plain")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("solve-rhs", help="solve P(-iD) u = exp(i x0.x) F")
    p.add_argument("equation")
    p.add_argument("--rhs", required=True, help="right-hand side polynomial F")
    _common(p, degree_required=False)
    p.add_argument("--degree", "-L", type=int, default=None, help="degree cap (default deg F + m)")
    p.add_argument("--format", choices=("plain", "json", "latex"), default="plain")
    p.set_defaults(func=cmd_solve_rhs)

    p = sub.add_parser("matrix", help="dump the derivative matrix")
    p.add_argument("equation")
    _common(p)
    p.add_argument("--block", nargs=2, type=int, metavar=("k", "K"), help="dump only block (k, K)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("dim", help="predicted vs computed solution-space dimension")
    p.add_argument("equation")
    _common(p)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("verify", help="re-check a JSON solution by direct differentiation")
    p.add_argument("solution", help="JSON document from solve/solve-rhs, or - for stdin")
    p.add_argument("equations", nargs="+")
    p.add_argument("--rhs", help="right-hand side F, when the document has a particular solution")
    p.add_argument("--vars")
    p.add_argument("--operator", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


_SHORT_OPTION = re.compile(r"-[hL]\d*$")


def _protect_negatives(argv: Sequence[str]) -> List[str]:
    # argparse takes "-x^2-y^2" for an option; a leading space keeps it positional
    return [
        " " + a if a.startswith("-") and a != "-" and not a.startswith("--") and not _SHORT_OPTION.match(a) else a
        for a in argv
    ]


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_protect_negatives(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except _Failure as exc:
        err.write(f"error: {exc}\n")
        return exc.code
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except (ArityMismatch, DimensionMismatch, DegreeExceedsCap, ZeroPolynomial) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DIMENSION
    except Inconsistent as exc:
        err.write(f"inconsistent: {exc}\n")
        return EXIT_INCONSISTENT
    except IndexError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DIMENSION


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
