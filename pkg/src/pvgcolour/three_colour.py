"""Deciding 2- and 3-colourability of a PVG from the shape of its point set.

A PVG is 3-colourable exactly when the point set is collinear, collinear but
for one point, collinear but for two mutually invisible points, or the
six-point octahedron.  Each of those shapes has an explicit colouring, and
the verdict is cross-checked against a direct search for a 4-clique.
"""
from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field

from .errors import InternalInconsistency, NotReduced
from .geometry import PointSet, _cross, _sign, all_collinear, build_pvg, convex_hull
from .graph import VisibilityGraph, canonical, find_triangle, has_k4, is_valid_colouring


class Form(enum.Enum):
    ALL_COLLINEAR = "AllCollinear"
    ONE_OFF_LINE = "OneOffLine"
    TWO_INVISIBLE_OFF_PATH = "TwoInvisibleOffPath"
    TWO_VISIBLE_OFF_PATH = "TwoVisibleOffPath"
    OCTAHEDRON = "Octahedron"
    NONE = "None"


THREE_COLOURABLE_FORMS = frozenset(
    {Form.ALL_COLLINEAR, Form.ONE_OFF_LINE, Form.TWO_INVISIBLE_OFF_PATH, Form.OCTAHEDRON}
)


@dataclass(frozen=True)
class StructuralForm:
    tag: Form
    line: tuple = ()  # collinear part, sorted along the line
    witnesses: tuple = ()  # the off-line points, or the octahedron's invisible pairs
    notes: tuple = field(default=(), compare=False)


class NonUniqueColouringWarning(UserWarning):
    pass


def _sort_along(ps, idx):
    return tuple(sorted(idx, key=lambda i: (ps.xs[i], ps.ys[i])))


def _candidate_lines(ps):
    n = len(ps)
    xs, ys = ps.xs, ps.ys
    head = range(min(n, 5))
    seen = set()
    for a in head:
        for b in head:
            if b <= a:
                continue
            on = frozenset(
                k for k in range(n) if _cross(xs[a], ys[a], xs[b], ys[b], xs[k], ys[k]) == 0
            )
            if on not in seen:
                seen.add(on)
                yield on


def _segments_meet(ps, a, b, c, d):
    xs, ys = ps.xs, ps.ys

    def o(p, q, r):
        return _sign(_cross(xs[p], ys[p], xs[q], ys[q], xs[r], ys[r]))

    def on_seg(p, q, r):
        return min(xs[p], xs[q]) <= xs[r] <= max(xs[p], xs[q]) and min(ys[p], ys[q]) <= ys[r] <= max(ys[p], ys[q])

    o1, o2, o3, o4 = o(a, b, c), o(a, b, d), o(c, d, a), o(c, d, b)
    if o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4):
        return True
    return (
        (o1 == 0 and on_seg(a, b, c))
        or (o2 == 0 and on_seg(a, b, d))
        or (o3 == 0 and on_seg(c, d, a))
        or (o4 == 0 and on_seg(c, d, b))
    )


def classify_form(ps: PointSet, graph: VisibilityGraph | None = None) -> StructuralForm:
    """First matching structural form, tried in the order (a) to (e)."""
    n = len(ps)
    if n == 0:
        raise ValueError("empty point set")
    if all_collinear(ps):
        return StructuralForm(Form.ALL_COLLINEAR, _sort_along(ps, range(n)))
    g = graph if graph is not None else build_pvg(ps)
    lines = list(_candidate_lines(ps))
    everyone = frozenset(range(n))
    for on in lines:
        off = everyone - on
        if len(off) == 1:
            return StructuralForm(Form.ONE_OFF_LINE, _sort_along(ps, on), tuple(off))
    pairs = [(on, tuple(sorted(everyone - on))) for on in lines if len(everyone - on) == 2]
    for on, (v, w) in pairs:
        if not g.adjacent(v, w):
            return StructuralForm(Form.TWO_INVISIBLE_OFF_PATH, _sort_along(ps, on), (v, w))
    for on, (v, w) in pairs:
        line = _sort_along(ps, on)
        if not _segments_meet(ps, v, w, line[0], line[-1]):
            return StructuralForm(Form.TWO_VISIBLE_OFF_PATH, line, (v, w))
    if n == 6:
        non_edges = [(i, j) for i in range(6) for j in range(i + 1, 6) if not g.adjacent(i, j)]
        covered = {v for e in non_edges for v in e}
        if len(non_edges) == 3 and len(covered) == 6:
            return StructuralForm(Form.OCTAHEDRON, (), tuple(non_edges))
    return StructuralForm(Form.NONE)


def _alternate(line):
    return {v: k % 2 for k, v in enumerate(line)}


def _colouring_for(form: StructuralForm, n: int):
    if form.tag is Form.ALL_COLLINEAR:
        col = _alternate(form.line)
    elif form.tag in (Form.ONE_OFF_LINE, Form.TWO_INVISIBLE_OFF_PATH):
        col = _alternate(form.line)
        for v in form.witnesses:
            col[v] = 2
    elif form.tag is Form.OCTAHEDRON:
        col = {}
        for c, (a, b) in enumerate(form.witnesses):
            col[a] = col[b] = c
    else:
        return None
    return [col[i] for i in range(n)]


def three_colourable(ps: PointSet, graph: VisibilityGraph | None = None):
    """A 3-colouring (list of ints) if the PVG has one, else ``None``."""
    g = graph if graph is not None else build_pvg(ps)
    form = classify_form(ps, g)
    colours = _colouring_for(form, len(ps))
    witness = has_k4(g)
    if (colours is None) != (witness is not None):
        raise InternalInconsistency(
            f"form {form.tag.value} disagrees with 4-clique search (witness {witness})"
        )
    if colours is not None and not is_valid_colouring(g, colours):
        raise InternalInconsistency(f"constructed colouring for form {form.tag.value} is not proper")
    return colours


def two_colourable(ps: PointSet):
    """Alternating colouring along the line when every point is collinear."""
    if not all_collinear(ps):
        return None
    col = _alternate(_sort_along(ps, range(len(ps))))
    return [col[i] for i in range(len(ps))]


def hull_vertex_sees_triangle(ps: PointSet, g: VisibilityGraph):
    """First ``(hull_vertex, triangle)`` where the hull vertex sees a K3, else ``None``."""
    if len(ps) < 4:
        return None
    for h in sorted(convex_hull(ps).vertices):
        tri = find_triangle(g, g.rows[h])
        if tri is not None:
            return h, tri
    return None


def unique_3colouring_of_reduced(ps: PointSet, graph: VisibilityGraph | None = None, deleted: bool = False):
    """The 3-colouring of a reduced set in canonical first-seen colour order.

    ``deleted`` says whether the set came out of at least one deletion; a
    collinear set is only legitimate when it did not, and then its colouring
    is not unique, which is reported as a :class:`NonUniqueColouringWarning`.
    """
    g = graph if graph is not None else build_pvg(ps)
    hit = hull_vertex_sees_triangle(ps, g)
    if hit is not None:
        raise NotReduced(f"hull vertex {hit[0]} sees triangle {hit[1]}")
    if all_collinear(ps):
        if deleted:
            raise NotReduced("a reduced set left by deletions always keeps a triangle")
        warnings.warn("collinear set: its 3-colouring is not unique", NonUniqueColouringWarning)
    colours = three_colourable(ps, g)
    return None if colours is None else list(canonical(colours))
