"""Command-line front end: solve one equation, run the comparison grid,
or estimate the convergence order of a run."""

from __future__ import annotations

import argparse
import math
import sys
from typing import Optional, Sequence

from . import analysis, bench
from .core import Status, StopCriteria
from .methods import METHOD_TAGS, FsVariant, MethodId, iterate

FUNCTION_NAMES = ("f1", "f2", "f3", "f4", "f5", "f6", "f7")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_CONVERGED = 2
EXIT_BREAKDOWN = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract here is exit 1
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--m", type=int, default=1, help="resolution multiplier M; node count is 2M")
    sub.add_argument("--points", type=int, default=None, help="node count override (P >= 1)")
    sub.add_argument("--x0", type=float, default=None, help="starting point override")
    sub.add_argument("--tol", type=float, default=1e-15, help="step and residual tolerance")
    sub.add_argument("--max-iter", type=int, default=100)
    sub.add_argument(
        "--fs-variant",
        choices=[v.value for v in FsVariant],
        default=FsVariant.AS_PRINTED.value,
        help="inner-point convention for the fs method",
    )
    sub.add_argument("--out", metavar="PATH", default=None, help="write output to PATH instead of stdout")


def build_parser() -> _Parser:
    parser = _Parser(prog="haarnewton", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    solve = sub.add_parser("solve", help="run one method on one suite equation")
    solve.add_argument("--function", required=True, choices=FUNCTION_NAMES)
    solve.add_argument("--method", required=True, choices=METHOD_TAGS)
    solve.add_argument("--trace", action="store_true", help="print the per-iterate trace")
    _add_common(solve)

    compare = sub.add_parser("compare", help="run the benchmark comparison grid")
    compare.add_argument("--functions", default=",".join(FUNCTION_NAMES),
                         help="comma-separated suite function names")
    compare.add_argument("--methods", default="wf,fs,oz,klw,new",
                         help="comma-separated method labels")
    compare.add_argument("--format", choices=bench.FORMATS, default="text")
    _add_common(compare)

    coc = sub.add_parser("coc", help="convergence-order diagnostics for one run")
    coc.add_argument("--function", required=True, choices=FUNCTION_NAMES)
    coc.add_argument("--method", required=True, choices=METHOD_TAGS)
    coc.add_argument("--c2", type=float, default=None, help="analytic f''(root)/(2 f'(root))")
    coc.add_argument("--c3", type=float, default=None, help="analytic f'''(root)/(6 f'(root))")
    _add_common(coc)

    return parser


def _points(args: argparse.Namespace, parser: _Parser) -> int:
    if args.points is not None:
        if args.points < 1:
            parser.error("--points must be >= 1")
        return args.points
    if args.m < 1:
        parser.error("--m must be >= 1")
    return 2 * args.m


def _method(tag: str, args: argparse.Namespace, parser: _Parser) -> MethodId:
    return MethodId(
        tag=tag,
        haar_points=_points(args, parser),
        fs_variant=FsVariant(args.fs_variant),
    )


def _criteria(args: argparse.Namespace, parser: _Parser) -> StopCriteria:
    if args.tol <= 0:
        parser.error("--tol must be positive")
    if args.max_iter < 1:
        parser.error("--max-iter must be >= 1")
    return StopCriteria(step_tol=args.tol, residual_tol=args.tol, max_iter=args.max_iter)


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _status_exit(status: Status) -> int:
    if status is Status.CONVERGED:
        return EXIT_OK
    if status is Status.DERIVATIVE_BREAKDOWN:
        return EXIT_BREAKDOWN
    return EXIT_NOT_CONVERGED


def _run(args: argparse.Namespace, parser: _Parser):
    entry = bench.suite_entry(args.function)
    x0 = entry.x0 if args.x0 is None else args.x0
    method = _method(args.method, args, parser)
    return entry, iterate(method, entry.problem, x0, _criteria(args, parser))


def cmd_solve(args: argparse.Namespace, parser: _Parser) -> int:
    entry, outcome = _run(args, parser)
    lines = [
        f"function:   {entry.problem.name}",
        f"method:     {args.method}",
        f"status:     {outcome.status.value}",
        f"result:     {analysis.classify(outcome)}",
        f"iterations: {outcome.iterations}",
        f"nfe:        {outcome.nfe}",
    ]
    if args.trace:
        lines.append("trace:")
        for i, (x, r) in enumerate(zip(outcome.trace.iterates, outcome.trace.residuals)):
            lines.append(
                f"  {i:3d}  x={analysis.format_significant(x)}"
                f"  f(x)={analysis.format_significant(r)}"
            )
    _emit("\n".join(lines) + "\n", args.out)
    return _status_exit(outcome.status)


def cmd_compare(args: argparse.Namespace, parser: _Parser) -> int:
    names = [n.strip() for n in args.functions.split(",") if n.strip()]
    labels = [m.strip() for m in args.methods.split(",") if m.strip()]
    for name in names:
        if name not in FUNCTION_NAMES:
            parser.error(f"unknown function {name!r}")
    for label in labels:
        if label not in METHOD_TAGS:
            parser.error(f"unknown method {label!r}")
    if not names or not labels:
        parser.error("need at least one function and one method")
    suite = [bench.suite_entry(name) for name in names]
    methods = [_method(label, args, parser) for label in labels]
    table = bench.run_comparison(suite, methods, _criteria(args, parser))
    _emit(bench.format_table(table, args.format), args.out)
    return EXIT_OK


def cmd_coc(args: argparse.Namespace, parser: _Parser) -> int:
    entry, outcome = _run(args, parser)
    report = analysis.convergence_report(
        outcome.trace,
        outcome.root,
        c2=args.c2,
        c3=args.c3,
        n_points=_points(args, parser),
    )
    lines = [
        f"function:             {entry.problem.name}",
        f"method:               {args.method}",
        f"status:               {outcome.status.value}",
        f"order (coc):          {report.coc:.6g}",
        f"usable triples:       {report.usable_triples}",
        f"empirical constant:   {report.error_constant_empirical:.6g}",
    ]
    if args.c2 is not None and args.c3 is not None:
        lines.append(f"theoretical constant: {report.error_constant_theoretical:.6g}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if math.isfinite(report.coc) else EXIT_NOT_CONVERGED


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"solve": cmd_solve, "compare": cmd_compare, "coc": cmd_coc}
    return handlers[args.command](args, parser)


if __name__ == "__main__":
    sys.exit(main())
