"""Polynomial-time 4-colouring of point visibility graphs.

Pipeline:

1. a 3-colourable set is coloured directly;
2. hull vertices that see a triangle are peeled off one at a time, leaving
   the reduced set;
3. the reduced set has only a handful of 4-colourings, produced either by a
   capped search (3-colourable reduced set plus its last deleted point) or by
   propagating each hull vertex's colour class along its ray fan;
4. deleted points are put back in reverse order, each taking the one colour
   missing from the triangle it saw.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    EnumerationOverflow,
    PreconditionError,
    StructuralViolation,
    WitnessNotTricoloured,
)
from .geometry import Point, PointSet, Triple, build_pvg, convex_hull, frontier_triples, ray_fan
from .graph import VisibilityGraph, _colour_search, _Budget, bits, find_triangle, has_k4, is_valid_colouring
from .three_colour import hull_vertex_sees_triangle, three_colourable

ENUMERATION_CAP = 16


@dataclass(frozen=True)
class Deletion:
    vertex: int
    witness_k3: tuple


@dataclass(frozen=True)
class ReductionTrace:
    original: PointSet
    deletions: tuple
    reduced: PointSet  # labels are indices into ``original``

    @property
    def reduced_indices(self) -> tuple:
        return self.reduced.labels

    def replay(self) -> PointSet:
        gone = {d.vertex for d in self.deletions}
        return self.original.subset(i for i in range(len(self.original)) if i not in gone)


@dataclass(frozen=True)
class CandidateColouring:
    assignment: tuple  # colour per point of the set the candidate was built for
    provenance: tuple
    valid: bool = True


def reduce(ps: PointSet, graph: VisibilityGraph | None = None, check: bool = False) -> ReductionTrace:
    """Peel hull vertices that see a K3 until none is left.

    Among the current hull vertices the smallest index that sees a triangle
    is deleted first; its witness is the lexicographically first triangle
    among its visible neighbours.  Hull vertices never block anything, so
    visibility among survivors is the induced subgraph of ``graph``; with
    ``check`` that is re-verified from scratch after every deletion.
    """
    g = graph if graph is not None else build_pvg(ps)
    n = len(ps)
    alive = (1 << n) - 1
    clean = set()  # vertices known not to see a triangle; stays true as points vanish
    deletions = []
    while True:
        members = list(bits(alive))
        if len(members) < 4:
            break
        hit = None
        for h in sorted(convex_hull(ps, members).vertices):
            if h in clean:
                continue
            tri = find_triangle(g, g.rows[h] & alive)
            if tri is None:
                clean.add(h)
            else:
                hit = Deletion(h, tri)
                break
        if hit is None:
            break
        deletions.append(hit)
        alive &= ~(1 << hit.vertex)
        if check:
            rest = list(bits(alive))
            if build_pvg(ps.subset(rest)) != g.induced(rest):
                raise StructuralViolation("deletion soundness", f"deleting {hit.vertex} changed visibility")
    return ReductionTrace(ps, tuple(deletions), ps.subset(bits(alive)))


def reduced_is_reduced(ps: PointSet, graph: VisibilityGraph | None = None) -> bool:
    g = graph if graph is not None else build_pvg(ps)
    return hull_vertex_sees_triangle(ps, g) is None


def enumerate_reduced_plus_one(
    ps_r: PointSet, p: Point, label=None, graph: VisibilityGraph | None = None
) -> list:
    """All 4-colourings of ``ps_r`` plus ``p`` (``p`` last), one per permutation class.

    The count is bounded by a constant for genuine reduced sets; going over
    :data:`ENUMERATION_CAP` raises instead of truncating.
    """
    label = len(ps_r.labels) if label is None else label
    joined = PointSet(list(ps_r) + [p], list(ps_r.labels) + [label])
    g = graph if graph is not None else build_pvg(joined)
    found = _colour_search(g, 4, None, _Budget(None), True, ENUMERATION_CAP + 1, True)
    if len(found) > ENUMERATION_CAP:
        raise EnumerationOverflow(
            f"more than {ENUMERATION_CAP} 4-colourings of a reduced set plus its last deleted point"
        )
    return [CandidateColouring(tuple(c), ("search", k)) for k, c in enumerate(found)]


@dataclass
class StructureReport:
    hull_vertices: tuple
    fans: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def hull_structure_checks(ps_r: PointSet, graph: VisibilityGraph | None = None, strict: bool = True) -> StructureReport:
    """Check the shape every reduced, non-3-colourable set must have.

    Failures are collected as ``(property, detail)`` pairs; with ``strict`` the
    first one is raised as :class:`StructuralViolation`.
    """
    g = graph if graph is not None else build_pvg(ps_r)
    if has_k4(g) is None:
        raise PreconditionError("reduced set is 3-colourable; structure checks do not apply")
    hull = convex_hull(ps_r)
    report = StructureReport(hull.vertices)
    fail = report.failures.append
    if len(hull.vertices) != 3:
        fail(("three hull vertices", f"hull has {len(hull.vertices)} vertices"))
    if hull.points != frozenset(hull.vertices):
        fail(("hull points are vertices", f"boundary points {sorted(hull.points - set(hull.vertices))}"))
    for h in hull.vertices:
        fan = ray_fan(ps_r, h)
        report.fans[h] = fan
        if len(fan.rays) < 3:
            fail(("internal frontier point", f"hull vertex {h} has {len(fan.rays)} rays"))
        big = fan.big
        for k, t in enumerate(frontier_triples(ps_r, fan)):
            if t is Triple.CONCAVE:
                fail(("no concave triple", f"hull vertex {h}, frontier triple at ray {k}"))
            elif t is Triple.CONVEX and not big[k + 1]:
                fail(("convex vertex on big ray", f"hull vertex {h}, ray {k + 1} is small"))
        if len(fan.big_rays) < 2:
            fail(("two big rays", f"hull vertex {h} has {len(fan.big_rays)} big rays"))
    if strict and report.failures:
        raise StructuralViolation(*report.failures[0])
    return report


def _colour_class(fan, carries_first: bool) -> frozenset:
    # The apex colour never sits on a first point (those see the apex), so on
    # a big ray that carries it, it takes the 2nd, 4th, ... points.  Walking
    # the big rays clockwise, the carrying role alternates from one big ray to
    # the next, whether they are adjacent or separated by a break of either
    # parity.
    members = {fan.apex}
    carrying = carries_first
    for k in fan.big_rays:
        if carrying:
            members.update(fan.rays[k][1::2])
        carrying = not carrying
    return frozenset(members)


def eight_candidates(ps_r: PointSet, graph: VisibilityGraph | None = None, report: StructureReport | None = None) -> list:
    """The at most eight 4-colourings of a reduced, non-3-colourable set.

    Hull vertices get colours 0, 1, 2 clockwise from the lexicographically
    smallest one.  Each colour class is fixed by one binary choice (does the
    first big ray from that hull vertex carry its colour); points claimed by
    no class get colour 3.  Candidates whose classes overlap are dropped;
    the rest come back with their validity.
    """
    g = graph if graph is not None else build_pvg(ps_r)
    if report is None:
        report = hull_structure_checks(ps_r, g)
    hull = report.hull_vertices
    if len(hull) != 3:
        raise StructuralViolation("three hull vertices", f"hull has {len(hull)} vertices")
    options = []
    for h in hull:
        fan = report.fans.get(h) or ray_fan(ps_r, h)
        options.append([(choice, _colour_class(fan, choice)) for choice in (True, False)])
    out = []
    for combo in itertools.product(*options):
        classes = [cls for _, cls in combo]
        if any(a & b for a, b in itertools.combinations(classes, 2)):
            continue
        colours = [3] * len(ps_r)
        for c, cls in enumerate(classes):
            for v in cls:
                colours[v] = c
        out.append(
            CandidateColouring(tuple(colours), tuple(choice for choice, _ in combo), is_valid_colouring(g, colours))
        )
    return out


def reinsert(trace: ReductionTrace, base: dict, graph: VisibilityGraph | None = None):
    """Extend ``base`` (original index -> colour) over the deleted points.

    Returns the full colouring as a list, or ``None`` as soon as a forced
    colour clashes with a visible neighbour.
    """
    g = graph if graph is not None else build_pvg(trace.original)
    colours = [-1] * len(trace.original)
    for v, c in base.items():
        colours[v] = c
    for d in reversed(trace.deletions):
        v = d.vertex
        if colours[v] >= 0:
            continue
        seen = {colours[w] for w in d.witness_k3}
        if len(seen) != 3 or -1 in seen:
            raise WitnessNotTricoloured(f"witness {d.witness_k3} of vertex {v} has colours {sorted(seen)}")
        c = ({0, 1, 2, 3} - seen).pop()
        for u in bits(g.rows[v]):
            if colours[u] == c:
                return None
        colours[v] = c
    if -1 in colours:
        raise ValueError("base colouring does not cover the reduced set")
    return colours


def candidate_bases(ps: PointSet, trace: ReductionTrace, g: VisibilityGraph) -> list:
    """Colourings of the reduced set (original indices) to try reinserting from."""
    idx = trace.reduced_indices
    g_r = g.induced(idx)
    ps_r = trace.reduced
    if three_colourable(ps_r, g_r) is not None:
        if not trace.deletions:
            raise PreconditionError("3-colourable set reached the reduced-set stage")
        p = trace.deletions[-1].vertex
        joined = list(idx) + [p]
        cands = enumerate_reduced_plus_one(ps_r, ps[p], p, g.induced(joined))
        return [dict(zip(joined, c.assignment)) for c in cands]
    cands = eight_candidates(ps_r, g_r)
    return [dict(zip(idx, c.assignment)) for c in cands if c.valid]


def decide_four_colouring(ps: PointSet, graph: VisibilityGraph | None = None):
    """A 4-colouring of the PVG of ``ps`` as a list, or ``None`` if there is none."""
    g = graph if graph is not None else build_pvg(ps)
    colours = three_colourable(ps, g)
    if colours is not None:
        return colours
    trace = reduce(ps, g)
    for base in candidate_bases(ps, trace, g):
        full = reinsert(trace, base, g)
        if full is not None:
            if not is_valid_colouring(g, full):
                raise StructuralViolation("reinsertion", "reinsertion produced an improper colouring")
            return full
    return None
