"""Text formats: point sets, graphs, colourings and line metadata."""
from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import ParseError
from .geometry import PointSet
from .graph import VisibilityGraph

_NUMBER = re.compile(r"-?\d+(?:/\d+)?")


def _fmt(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def parse_points(text: str) -> PointSet:
    """``X Y`` per data line; ``#`` comments and blank lines are skipped."""
    pts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) != 2 or not all(_NUMBER.fullmatch(t) for t in toks):
            raise ParseError(f"line {lineno}: expected 'X Y' with integer or p/q coordinates, got {line!r}")
        try:
            pts.append((Fraction(toks[0]), Fraction(toks[1])))
        except ZeroDivisionError:
            raise ParseError(f"line {lineno}: zero denominator") from None
    if not pts:
        raise ParseError("no points")
    return PointSet(pts)


def format_points(ps: PointSet) -> str:
    return "".join(f"{_fmt(p.x)} {_fmt(p.y)}\n" for p in ps)


def format_graph(g: VisibilityGraph) -> str:
    edges = g.edges()
    return f"{g.n} {len(edges)}\n" + "".join(f"{i} {j}\n" for i, j in edges)


def parse_graph(text: str) -> VisibilityGraph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    try:
        n, m = map(int, rows[0])
        edges = [tuple(map(int, r)) for r in rows[1:]]
    except (ValueError, IndexError):
        raise ParseError("malformed graph file") from None
    if len(edges) != m or any(len(e) != 2 or not 0 <= e[0] < e[1] < n for e in edges):
        raise ParseError("graph file edges do not match its header")
    return VisibilityGraph.from_edges(n, edges)


def format_colouring(colours) -> str:
    return "".join(f"{v} {c}\n" for v, c in enumerate(colours))


def parse_colouring(text: str) -> list:
    pairs = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            v, c = map(int, line.split())
        except ValueError:
            raise ParseError(f"line {lineno}: expected 'vertex colour'") from None
        if v in pairs:
            raise ParseError(f"line {lineno}: vertex {v} coloured twice")
        pairs[v] = c
    if sorted(pairs) != list(range(len(pairs))):
        raise ParseError("colouring must list vertices 0..n-1")
    return [pairs[v] for v in range(len(pairs))]


def format_metadata(entries) -> str:
    return json.dumps(list(entries), indent=1) + "\n"
