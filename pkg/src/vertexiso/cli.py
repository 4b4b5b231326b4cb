"""Command-line front end.

Exit status: 0 success, 1 usage or input error, 2 falsification found,
3 some search exceeded its budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import kernels
from .compression import Kind, centralize, compress
from .formula import NotCompressedError, boundary_via_projections, initial_segment_boundary_size
from .lattice import (DomainSignature, PointSetFormatError, boundary_size, format_pointset,
                      read_pointset, vertex_boundary, write_pointset)
from .oracle import DEFAULT_BUDGET, DEFAULT_WITNESS_CAP, verify_theorem1
from .ordering import initial_segment, iter_points
from .render import Style, render_svg

EXIT_OK, EXIT_USAGE, EXIT_FALSIFIED, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _natural(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def _signature(args) -> DomainSignature:
    sig = DomainSignature(args.z, args.n)
    if sig.dim < 1:
        raise UsageError("domain needs --z K and/or --n D with K + D >= 1")
    return sig


def _parse_box(text: str, sig: DomainSignature):
    parts = text.split(",")
    try:
        box = [tuple(int(v) for v in part.split(":")) for part in parts]
    except ValueError:
        raise UsageError(f"bad --box {text!r}; expected LO:HI or LO:HI,LO:HI,...") from None
    if any(len(b) != 2 for b in box):
        raise UsageError(f"bad --box {text!r}; expected LO:HI or LO:HI,LO:HI,...")
    if len(box) == 1:
        box = box * sig.dim
    if len(box) != sig.dim:
        raise UsageError(f"--box has {len(box)} intervals, domain has dimension {sig.dim}")
    return box


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_order(args) -> int:
    sig = _signature(args)
    lines = [f"{i} " + " ".join(map(str, p))
             for i, p in zip(range(1, args.count + 1), iter_points(sig))]
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_boundary(args) -> int:
    if args.segment_size is not None:
        sig = _signature(args)
        print(initial_segment_boundary_size(sig, args.segment_size))
        if args.output:
            write_pointset(vertex_boundary(initial_segment(sig, args.segment_size)), args.output)
        return EXIT_OK
    if not args.input:
        raise UsageError("boundary needs --input PATH (or --segment-size N)")
    S = read_pointset(args.input)
    print(boundary_via_projections(S) if args.formula else boundary_size(S))
    if args.output:
        write_pointset(vertex_boundary(S), args.output)
    return EXIT_OK


def cmd_compress(args) -> int:
    S = read_pointset(args.input)
    if args.all:
        T = centralize(S)
    else:
        if args.kind is None or args.coordinate is None:
            raise UsageError("compress needs --all, or --kind and --coordinate")
        T = compress(S, args.kind, args.coordinate)
    print(f"before {boundary_size(S)}")
    print(f"after {boundary_size(T)}")
    if args.output:
        write_pointset(T, args.output)
    else:
        sys.stdout.write(format_pointset(T))
    return EXIT_OK


def cmd_verify(args) -> int:
    sig = _signature(args)
    box = _parse_box(args.box, sig) if args.box else None
    mode = "compressed_only" if args.mode == "compressed" else "full"
    reports = verify_theorem1(sig, args.n_max, mode, box=box, budget=args.budget,
                              witness_cap=args.witness_cap, workers=args.workers,
                              backend=args.backend)
    timing = not args.no_timing
    if args.format == "structured":
        text = "".join(json.dumps(r.to_dict(timing), sort_keys=True) + "\n" for r in reports)
    else:
        text = "".join(r.to_text(timing) for r in reports)
    _emit(text, args.output)
    if any(r.falsified for r in reports):
        return EXIT_FALSIFIED
    if any(r.budget_exceeded for r in reports):
        return EXIT_BUDGET
    return EXIT_OK


def cmd_render(args) -> int:
    S = read_pointset(args.input)
    style = Style(cell=args.cell_size, set_color=args.set_color,
                  boundary_color=args.boundary_color)
    _emit(render_svg(S, style), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="vertexiso",
                     description="Vertex isoperimetry on the l-infinity lattice graph Z^k x N^d.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def domain_flags(p):
        p.add_argument("--z", type=_natural, default=0, metavar="K",
                       help="number of integer-valued coordinates")
        p.add_argument("--n", type=_natural, default=0, metavar="D",
                       help="number of natural-valued coordinates")

    p = sub.add_parser("order", help="list the first points of the well-ordering")
    domain_flags(p)
    p.add_argument("count", type=_positive, help="how many points to list")
    p.add_argument("--output", help="write the listing here instead of stdout")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("boundary", help="vertex boundary size of a point set")
    domain_flags(p)
    p.add_argument("--input", help="point-set file")
    how = p.add_mutually_exclusive_group()
    how.add_argument("--direct", action="store_true", help="count the boundary directly (default)")
    how.add_argument("--formula", action="store_true",
                     help="projection-sum formula; the set must be compressed in every coordinate")
    how.add_argument("--segment-size", type=_positive, metavar="N",
                     help="boundary of the initial segment of size N (needs --z/--n)")
    p.add_argument("--output", help="also write the boundary set here")
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("compress", help="apply a compression operator")
    p.add_argument("--input", required=True, help="point-set file")
    p.add_argument("--output", help="write the result here instead of stdout")
    p.add_argument("--kind", choices=[k.value for k in Kind])
    p.add_argument("--coordinate", type=_positive, metavar="I", help="1-based coordinate index")
    p.add_argument("--all", action="store_true", help="centralize: compress every coordinate to a fixpoint")
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("verify", help="exhaustively check that initial segments minimise the boundary")
    domain_flags(p)
    p.add_argument("--n-max", type=_positive, required=True, metavar="N")
    p.add_argument("--mode", choices=["full", "compressed"], default="full")
    p.add_argument("--box", help="search box, LO:HI for every coordinate or LO:HI,LO:HI,... "
                                 "(write --box=-3:3 for negative bounds)")
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET,
                   help="maximum subsets (or candidates) per size")
    p.add_argument("--witness-cap", type=_positive, default=DEFAULT_WITNESS_CAP)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--backend", choices=kernels.available_backends())
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed times from reports")
    p.add_argument("--output", help="write reports here instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a 2-D set and its boundary as SVG")
    p.add_argument("--input", required=True, help="point-set file")
    p.add_argument("--output", help="SVG path (stdout if omitted)")
    p.add_argument("--cell-size", type=_positive, default=Style.cell)
    p.add_argument("--set-color", default=Style.set_color)
    p.add_argument("--boundary-color", default=Style.boundary_color)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help, or a usage error already reported
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, PointSetFormatError, NotCompressedError, ValueError, OSError) as exc:
        print(f"vertexiso: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
