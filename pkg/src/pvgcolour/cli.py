"""Command-line entry point.

Exit codes: 0 yes/ok, 1 no/invalid, 2 error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .errors import PreconditionError, PVGError, SizeMismatch
from .example_g6 import build_g6, verify_g6
from .four_colour import decide_four_colouring
from .geometry import build_pvg
from .graph import chromatic_number, clique_number, is_valid_colouring
from .sat_reduction import build_zeta, parse_dimacs, verify_reduction
from .svg import render_svg
from .three_colour import three_colourable, two_colourable


def _read(path):
    return Path(path).read_text(encoding="utf-8")


def _write(path, text):
    Path(path).write_text(text, encoding="utf-8")


def cmd_pvg(args):
    ps = io.parse_points(_read(args.points))
    sys.stdout.write(io.format_graph(build_pvg(ps)))
    return 0


def cmd_colour(args):
    ps = io.parse_points(_read(args.points))
    deciders = {2: two_colourable, 3: three_colourable, 4: decide_four_colouring}
    colours = deciders[args.k](ps)
    if colours is None:
        print("NO")
        return 1
    text = io.format_colouring(colours)
    if args.out:
        _write(args.out, text)
        print("YES")
    else:
        sys.stdout.write(text)
    return 0


def cmd_chromatic(args):
    ps = io.parse_points(_read(args.points))
    if len(ps) > args.max_n:
        raise PreconditionError(f"{len(ps)} points exceeds --max-n {args.max_n}; the exact oracle is exponential")
    g = build_pvg(ps)
    print(f"chromatic {chromatic_number(g, budget=args.budget)}")
    print(f"clique {clique_number(g, budget=args.budget)}")
    return 0


def cmd_reduce_sat(args):
    f = parse_dimacs(_read(args.cnf))
    z = build_zeta(f)
    _write(args.out_points, io.format_points(z.points))
    _write(args.out_meta, io.format_metadata(z.metadata()))
    print(f"points: {len(z.points)} (l1 {len(z.on('l1'))}, l2 {len(z.on('l2'))}, l3 {len(z.on('l3'))})")
    if args.verify:
        report = verify_reduction(f, z, budget=args.budget)
        print("\n".join(report.lines()))
        return 0 if report.equivalent and report.structure_ok else 1
    return 0


def cmd_example_g6(args):
    e = build_g6()
    _write(args.out_points, io.format_points(e.points))
    _write(args.out_meta, io.format_metadata(e.metadata()))
    print(f"points: {len(e.points)} (l1 {len(e.on('l1'))}, l2 {len(e.on('l2'))}, l3 {len(e.on('l3'))})")
    if args.verify:
        report = verify_g6(e)
        print("\n".join(report.lines()))
        return 0 if (report.clique_number, report.chromatic_number) == (4, 6) else 1
    return 0


def cmd_verify(args):
    ps = io.parse_points(_read(args.points))
    colours = io.parse_colouring(_read(args.colouring))
    ok = is_valid_colouring(build_pvg(ps), colours)
    print("VALID" if ok else "INVALID")
    return 0 if ok else 1


def cmd_svg(args):
    ps = io.parse_points(_read(args.points))
    colours = io.parse_colouring(_read(args.colouring)) if args.colouring else None
    g = build_pvg(ps)
    if colours is not None and len(colours) != len(ps):
        raise SizeMismatch(f"colouring covers {len(colours)} vertices, point set has {len(ps)}")
    _write(args.out, render_svg(ps, g, colours, title=Path(args.points).name))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="pvgcolour", description="Colouring point visibility graphs exactly.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("pvg", help="print the visibility graph of a point set")
    s.add_argument("points")
    s.set_defaults(func=cmd_pvg)

    s = sub.add_parser("colour", help="decide k-colourability for k in 2..4")
    s.add_argument("points")
    s.add_argument("--k", type=int, choices=(2, 3, 4), required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_colour)

    s = sub.add_parser("chromatic", help="exact chromatic and clique number (exponential)")
    s.add_argument("points")
    s.add_argument("--max-n", type=int, default=25)
    s.add_argument("--budget", type=int, default=None)
    s.set_defaults(func=cmd_chromatic)

    s = sub.add_parser("reduce-sat", help="compile a 3-CNF file into a point set")
    s.add_argument("cnf")
    s.add_argument("--out-points", required=True)
    s.add_argument("--out-meta", required=True)
    s.add_argument("--verify", action="store_true")
    s.add_argument("--budget", type=int, default=2_000_000)
    s.set_defaults(func=cmd_reduce_sat)

    s = sub.add_parser("example-g6", help="build the clique-4 / chromatic-6 example")
    s.add_argument("--out-points", required=True)
    s.add_argument("--out-meta", required=True)
    s.add_argument("--verify", action="store_true")
    s.set_defaults(func=cmd_example_g6)

    s = sub.add_parser("verify", help="check a colouring against a point set")
    s.add_argument("points")
    s.add_argument("colouring")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("svg", help="render a point set and its visibility edges")
    s.add_argument("points")
    s.add_argument("--colouring")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_svg)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PVGError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
