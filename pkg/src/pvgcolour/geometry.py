"""Exact planar predicates, point sets, visibility graphs, hulls and ray fans.

Every predicate runs on integers: a :class:`PointSet` rescales its rational
coordinates by the lcm of their denominators once, which preserves
orientation, betweenness and distance order.
"""
from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import DuplicatePoints, NotHullVertex
from .graph import VisibilityGraph

# numpy int64 fast path is only taken when coordinate differences cannot overflow
_NUMPY_LIMIT = 1 << 61


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    def __str__(self):
        return f"({self.x}, {self.y})"


def point(x, y) -> Point:
    """Build a :class:`Point` from ints, Fractions or ``"p/q"`` strings."""
    return Point(Fraction(x), Fraction(y))


class Orientation(enum.IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _cross(ax, ay, bx, by, cx, cy):
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def _between(ax, ay, mx, my, bx, by) -> bool:
    # m in the open segment (a, b)
    if _cross(ax, ay, bx, by, mx, my) != 0:
        return False
    if (mx, my) == (ax, ay) or (mx, my) == (bx, by):
        return False
    return min(ax, bx) <= mx <= max(ax, bx) and min(ay, by) <= my <= max(ay, by)


def orientation(a: Point, b: Point, c: Point) -> Orientation:
    return Orientation(_sign(_cross(a[0], a[1], b[0], b[1], c[0], c[1])))


def strictly_between(a: Point, m: Point, b: Point) -> bool:
    """True iff ``m`` lies in the open segment ``(a, b)``."""
    return _between(a[0], a[1], m[0], m[1], b[0], b[1])


class PointSet:
    """Ordered set of distinct points; index ``i`` is vertex ``i`` of the PVG.

    ``labels`` carries caller-visible names for the points (by default their
    own indices); :meth:`subset` keeps the labels of the parent set, which is
    how reduced sets remember original vertex numbers.
    """

    __slots__ = ("points", "labels", "xs", "ys", "scale")

    def __init__(self, points: Iterable, labels: Sequence[int] | None = None):
        pts = tuple(p if isinstance(p, Point) else point(*p) for p in points)
        if len(set(pts)) != len(pts):
            seen = set()
            for p in pts:
                if p in seen:
                    raise DuplicatePoints(f"point {p} occurs more than once")
                seen.add(p)
        self.points = pts
        self.labels = tuple(range(len(pts))) if labels is None else tuple(labels)
        if len(self.labels) != len(pts):
            raise ValueError("labels must match points one to one")
        scale = 1
        for p in pts:
            scale = math.lcm(scale, p.x.denominator, p.y.denominator)
        self.scale = scale
        self.xs = tuple(int(p.x * scale) for p in pts)
        self.ys = tuple(int(p.y * scale) for p in pts)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def __repr__(self):
        return f"PointSet({[str(p) for p in self.points]})"

    def __eq__(self, other):
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.points == other.points and self.labels == other.labels

    def __hash__(self):
        return hash((self.points, self.labels))

    def subset(self, indices: Iterable[int]) -> "PointSet":
        idx = list(indices)
        return PointSet([self.points[i] for i in idx], [self.labels[i] for i in idx])

    def coords(self, i):
        return self.xs[i], self.ys[i]

    def index_of_label(self, label) -> int:
        return self.labels.index(label)


def visible(ps: PointSet, i: int, j: int) -> bool:
    """Definitional visibility test: scan every other point for a blocker."""
    xs, ys = ps.xs, ps.ys
    ax, ay, bx, by = xs[i], ys[i], xs[j], ys[j]
    for k in range(len(ps)):
        if k != i and k != j and _between(ax, ay, xs[k], ys[k], bx, by):
            return False
    return True


def build_pvg_naive(ps: PointSet) -> VisibilityGraph:
    """O(n^3) triple loop straight from the definition (used as a test oracle)."""
    n = len(ps)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if visible(ps, i, j)]
    return VisibilityGraph.from_edges(n, edges)


def build_pvg(ps: PointSet) -> VisibilityGraph:
    """Point visibility graph in O(n^2 log n).

    Around each point the others are bucketed by primitive direction vector;
    the nearest point of each bucket (smallest gcd multiplier) is the only
    visible one in that direction.
    """
    n = len(ps)
    if n == 0:
        raise ValueError("point set is empty")
    span = max(max(map(abs, ps.xs)), max(map(abs, ps.ys)))
    if n > 64 and span < _NUMPY_LIMIT // 2:
        rows = _pvg_rows_numpy(ps)
    else:
        rows = _pvg_rows_python(ps)
    return VisibilityGraph(n, rows)


def _pvg_rows_python(ps):
    n = len(ps)
    xs, ys = ps.xs, ps.ys
    rows = []
    for i in range(n):
        xi, yi = xs[i], ys[i]
        nearest = {}
        for j in range(n):
            if j == i:
                continue
            dx, dy = xs[j] - xi, ys[j] - yi
            g = math.gcd(dx, dy)
            key = (dx // g, dy // g)
            best = nearest.get(key)
            if best is None or g < best[0]:
                nearest[key] = (g, j)
        mask = 0
        for _, j in nearest.values():
            mask |= 1 << j
        rows.append(mask)
    return rows


def _pvg_rows_numpy(ps):
    n = len(ps)
    X = np.array(ps.xs, dtype=np.int64)
    Y = np.array(ps.ys, dtype=np.int64)
    rows = []
    for i in range(n):
        dx = X - X[i]
        dy = Y - Y[i]
        g = np.gcd(dx, dy)
        g[i] = 1
        ux = dx // g
        uy = dy // g
        order = np.lexsort((g, uy, ux))
        sx, sy = ux[order], uy[order]
        first = np.ones(n, dtype=bool)
        first[1:] = (sx[1:] != sx[:-1]) | (sy[1:] != sy[:-1])
        hit = np.zeros(n, dtype=bool)
        hit[order[first]] = True
        hit[i] = False
        rows.append(int.from_bytes(np.packbits(hit, bitorder="little").tobytes(), "little"))
    return rows


@dataclass(frozen=True)
class Hull:
    vertices: tuple  # corners, clockwise, starting at the lexicographically smallest
    points: frozenset  # every point on the boundary, corners included


def convex_hull(ps: PointSet, indices: Iterable[int] | None = None) -> Hull:
    """Convex hull of ``ps`` (or of the sub-collection ``indices``)."""
    xs, ys = ps.xs, ps.ys
    idx = sorted(range(len(ps)) if indices is None else indices, key=lambda i: (xs[i], ys[i]))
    if not idx:
        raise ValueError("convex hull of an empty set")
    if len(idx) == 1:
        return Hull((idx[0],), frozenset(idx))

    def half(seq):
        out = []
        for k in seq:
            while len(out) >= 2 and _cross(xs[out[-2]], ys[out[-2]], xs[out[-1]], ys[out[-1]], xs[k], ys[k]) <= 0:
                out.pop()
            out.append(k)
        return out

    lower = half(idx)
    upper = half(reversed(idx))
    ccw = lower[:-1] + upper[:-1]
    if len(ccw) < 2:  # all collinear: the two extremes
        ccw = [idx[0], idx[-1]]
    cw = (ccw[0],) + tuple(reversed(ccw[1:]))
    if len(cw) == 2:
        return Hull(cw, frozenset(idx))
    boundary = set(cw)
    edges = list(zip(cw, cw[1:] + cw[:1]))
    for k in idx:
        if k in boundary:
            continue
        for a, b in edges:
            if _between(xs[a], ys[a], xs[k], ys[k], xs[b], ys[b]):
                boundary.add(k)
                break
    return Hull(cw, frozenset(boundary))


@dataclass(frozen=True)
class Break:
    """A maximal run of small rays bounded by big rays on both sides."""

    start: int  # index of the first small ray of the run
    length: int

    @property
    def parity(self) -> str:
        return "odd" if self.length % 2 else "even"


@dataclass(frozen=True)
class RayFan:
    apex: int
    rays: tuple  # tuple of tuples of vertex indices, clockwise, each by distance
    breaks: tuple

    @property
    def frontier(self) -> tuple:
        return tuple(r[0] for r in self.rays)

    @property
    def big(self) -> tuple:
        return tuple(len(r) >= 2 for r in self.rays)

    @property
    def big_rays(self) -> tuple:
        return tuple(i for i, r in enumerate(self.rays) if len(r) >= 2)

    def ray_of(self, v) -> int:
        for i, r in enumerate(self.rays):
            if v in r:
                return i
        raise KeyError(v)


def ray_fan(ps: PointSet, apex: int, indices: Iterable[int] | None = None) -> RayFan:
    """Decompose the other points into open rays from hull vertex ``apex``.

    Rays are sorted clockwise beginning with the tangent ray that has every
    other ray on its clockwise side.  All angular work is orientation signs.
    """
    members = list(range(len(ps)) if indices is None else indices)
    if apex not in members or len(members) < 2:
        raise NotHullVertex(f"vertex {apex} is not part of a set of at least two points")
    if apex not in convex_hull(ps, members).vertices:
        raise NotHullVertex(f"vertex {apex} is not a convex hull vertex")
    xs, ys = ps.xs, ps.ys
    ax, ay = xs[apex], ys[apex]
    groups = {}
    for j in members:
        if j == apex:
            continue
        dx, dy = xs[j] - ax, ys[j] - ay
        g = math.gcd(dx, dy)
        groups.setdefault((dx // g, dy // g), []).append((g, j))

    dirs = sorted(groups, key=functools.cmp_to_key(_cw_cmp))
    rays = tuple(tuple(j for _, j in sorted(groups[d])) for d in dirs)
    return RayFan(apex, rays, _breaks(rays))


def _cw_cmp(u, v):
    # u precedes v when v is clockwise of u; a total order because every
    # direction lies in an open half-plane around a hull vertex
    c = u[0] * v[1] - u[1] * v[0]
    return -1 if c < 0 else (1 if c > 0 else 0)


def _breaks(rays):
    out = []
    big = [len(r) >= 2 for r in rays]
    i = 0
    k = len(rays)
    while i < k:
        if big[i]:
            i += 1
            continue
        j = i
        while j < k and not big[j]:
            j += 1
        if i > 0 and j < k:
            out.append(Break(i, j - i))
        i = j
    return tuple(out)


class Triple(enum.Enum):
    CONVEX = "convex"
    CONCAVE = "concave"
    STRAIGHT = "straight"


def frontier_triples(ps: PointSet, fan: RayFan) -> list:
    """Label each consecutive frontier triple.

    With rays in clockwise order, a counterclockwise turn means the middle
    point bulges toward the apex (convex); a clockwise turn bulges away and
    leaves the outer two points seeing each other past the middle ray
    (concave).
    """
    q = fan.frontier
    if len(q) < 3:
        return []
    xs, ys = ps.xs, ps.ys
    labels = []
    for a, b, c in zip(q, q[1:], q[2:]):
        s = _sign(_cross(xs[a], ys[a], xs[b], ys[b], xs[c], ys[c]))
        labels.append(Triple.CONVEX if s > 0 else Triple.CONCAVE if s < 0 else Triple.STRAIGHT)
    return labels


def all_collinear(ps: PointSet, indices: Iterable[int] | None = None) -> bool:
    idx = list(range(len(ps)) if indices is None else indices)
    if len(idx) <= 2:
        return True
    xs, ys = ps.xs, ps.ys
    a, b = idx[0], idx[1]
    return all(_cross(xs[a], ys[a], xs[b], ys[b], xs[k], ys[k]) == 0 for k in idx[2:])
