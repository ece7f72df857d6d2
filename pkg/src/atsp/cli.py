"""Command-line front end: gen, solve, eval, compare.

Exit codes: 0 success, 1 usage error, 2 size/guard error, 3 I/O or parse
error. All payloads printed to stdout are byte-stable for fixed inputs
except the runtime column carried in compare's JSON/CSV rows.

The ATSP_THREADS environment variable is accepted as a parallelism hint;
evaluation is deterministic regardless of its value.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .adversary import Ordering, adversarial_value
from .errors import AtspError, InvalidArgumentError, ParseError, TooLargeError
from .instances import (
    GridSpec,
    RadialSpec,
    gen_grid_segments,
    gen_radial_segments,
    gen_random,
    read_instance,
    write_instance,
)
from .report import (
    SOLVER_METHODS,
    build_compare_report,
    format_table,
    render_figure,
    report_to_dict,
    tour_points,
    write_csv,
)
from .svgout import render_svg

__all__ = ["main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_GUARD = 2
EXIT_IO = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; the contract here is 1 for usage errors
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="atsp", description="Worst-case tour planning over uncertainty regions.")
    sub = parser.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate an instance file")
    g.add_argument("--family", required=True, choices=["grid", "radial", "random"])
    g.add_argument("--out", required=True, metavar="PATH")
    g.add_argument("--side", type=int, help="grid: side length")
    g.add_argument("--eps", type=float, default=0.01, help="grid/radial spacing parameter")
    g.add_argument("--pairs", type=int, help="radial: number of long/short pairs")
    g.add_argument("--kind", choices=["points", "segment", "disk"], help="random: region kind")
    g.add_argument("--n", type=int, help="random: region count")
    g.add_argument("--seed", type=int, default=0, help="random: RNG seed")
    g.add_argument("--box", type=float, default=10.0, help="random: bounding box side")
    g.add_argument("--k", type=int, default=3, help="random points: candidates per region")
    g.add_argument("--radius", type=float, default=0.5, help="random disks: radius")
    g.add_argument("--samples", type=int, default=16, help="random disks: boundary samples")

    s = sub.add_parser("solve", help="run one method and print the result as JSON")
    s.add_argument("--in", dest="infile", required=True, metavar="PATH")
    s.add_argument("--method", required=True, choices=sorted(SOLVER_METHODS))

    e = sub.add_parser("eval", help="adversarial value of a given ordering")
    e.add_argument("--in", dest="infile", required=True, metavar="PATH")
    e.add_argument("--order", required=True, help="comma-separated region indices")
    e.add_argument("--open", dest="open_path", action="store_true", help="score an open path")

    c = sub.add_parser("compare", help="compare several methods on one instance")
    c.add_argument("--in", dest="infile", required=True, metavar="PATH")
    c.add_argument("--methods", required=True, help="comma-separated method names")
    c.add_argument("--svg", metavar="PATH", help="write a deterministic SVG rendering")
    c.add_argument("--fig", metavar="PATH", help="write a matplotlib figure (png)")
    c.add_argument("--csv", metavar="PATH", help="write the rows as CSV")
    return parser


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _cmd_gen(args) -> int:
    if args.family == "grid":
        if args.side is None:
            print("gen: --side is required for --family grid", file=sys.stderr)
            return EXIT_USAGE
        inst, _, _ = gen_grid_segments(GridSpec(args.side, args.eps))
    elif args.family == "radial":
        if args.pairs is None:
            print("gen: --pairs is required for --family radial", file=sys.stderr)
            return EXIT_USAGE
        inst, _, _ = gen_radial_segments(RadialSpec(args.pairs, args.eps))
    else:
        if args.kind is None or args.n is None:
            print("gen: --kind and --n are required for --family random", file=sys.stderr)
            return EXIT_USAGE
        inst = gen_random(
            args.kind, args.n, args.seed,
            box=args.box, k=args.k, radius=args.radius, samples_m=args.samples,
        )
    write_instance(inst, args.out)
    print(f"wrote {len(inst.regions)} regions to {args.out}")
    return EXIT_OK


def _cmd_solve(args) -> int:
    inst = read_instance(args.infile)
    res = SOLVER_METHODS[args.method](inst)
    print(
        _dump(
            {
                "method": res.method,
                "ordering": list(res.ordering.perm),
                "length": res.tour.length,
                "aux_weight": res.aux_weight,
                "choice": list(res.tour.choice),
                "points": [list(p) for p in tour_points(inst, res.tour)],
            }
        )
    )
    return EXIT_OK


def _cmd_eval(args) -> int:
    inst = read_instance(args.infile)
    try:
        perm = tuple(int(tok) for tok in args.order.split(","))
    except ValueError:
        print(f"eval: --order must be comma-separated integers, got {args.order!r}", file=sys.stderr)
        return EXIT_USAGE
    try:
        ordering = Ordering(perm)
    except InvalidArgumentError as e:
        print(f"eval: {e}", file=sys.stderr)
        return EXIT_USAGE
    tour = adversarial_value(inst, ordering, closed=not args.open_path)
    print(
        _dump(
            {
                "ordering": list(tour.ordering.perm),
                "choice": list(tour.choice),
                "length": tour.length,
                "closed": tour.closed,
                "points": [list(p) for p in tour_points(inst, tour)],
            }
        )
    )
    return EXIT_OK


def _cmd_compare(args) -> int:
    inst = read_instance(args.infile)
    methods = [tok for tok in args.methods.split(",") if tok]
    if not methods:
        print("compare: --methods must name at least one method", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = build_compare_report(inst, methods)
    except InvalidArgumentError as e:
        print(f"compare: {e}", file=sys.stderr)
        return EXIT_USAGE
    print(format_table(report))
    print()
    print(_dump(report_to_dict(report)))
    if args.svg:
        render_svg(inst, report.tours, args.svg)
    if args.csv:
        write_csv(report, args.csv)
    if args.fig:
        render_figure(inst, report, args.fig)
    return EXIT_OK


def main(argv=None) -> int:
    threads = os.environ.get("ATSP_THREADS")
    if threads is not None:
        try:
            if int(threads) < 1:
                raise ValueError
        except ValueError:
            print(f"atsp: ATSP_THREADS must be a positive integer, got {threads!r}", file=sys.stderr)
            return EXIT_USAGE
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code else EXIT_OK
    handler = {"gen": _cmd_gen, "solve": _cmd_solve, "eval": _cmd_eval, "compare": _cmd_compare}[args.cmd]
    try:
        return handler(args)
    except TooLargeError as e:
        print(f"atsp {args.cmd}: {e}", file=sys.stderr)
        return EXIT_GUARD
    except ParseError as e:
        print(f"atsp {args.cmd}: {e}", file=sys.stderr)
        return EXIT_IO
    except OSError as e:
        print(f"atsp {args.cmd}: {e}", file=sys.stderr)
        return EXIT_IO
    except AtspError as e:
        print(f"atsp {args.cmd}: {e}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
