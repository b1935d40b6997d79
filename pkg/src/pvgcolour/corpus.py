"""Seeded point-set generators for differential and property testing."""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .errors import DuplicatePoints
from .geometry import PointSet, build_pvg, convex_hull
from .graph import find_triangle, has_k4


def lattice(size: int) -> list:
    return [(x, y) for x in range(size) for y in range(size)]


def lattice_subsets(size: int, n_min: int, n_max: int, per_size: int, seed: int) -> list:
    """Distinct subsets of the ``size`` x ``size`` lattice, up to ``per_size`` for each cardinality.

    When a cardinality has no more than ``per_size`` subsets, all of them are
    returned.
    """
    rng = random.Random(seed)
    pts = lattice(size)
    out = []
    for n in range(n_min, n_max + 1):
        combos = list(itertools.combinations(pts, n))
        if len(combos) > per_size:
            combos = rng.sample(combos, per_size)
        out.extend(combos)
    return out


def random_lattice_sets(size: int, n_min: int, n_max: int, count: int, seed: int) -> list:
    rng = random.Random(seed)
    pts = lattice(size)
    return [tuple(rng.sample(pts, rng.randint(n_min, n_max))) for _ in range(count)]


def _line_meet(p1, p2, p3, p4):
    (x1, y1), (x2, y2), (x3, y3), (x4, y4) = p1, p2, p3, p4
    d = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
    if d == 0:
        return None
    a = x1 * y2 - y1 * x2
    b = x3 * y4 - y3 * x4
    return (a * (x3 - x4) - (x1 - x2) * b) / d, (a * (y3 - y4) - (y1 - y2) * b) / d


def _along(p, q, t):
    return p[0] + (q[0] - p[0]) * t, p[1] + (q[1] - p[1]) * t


def is_reduced_non_3_colourable(ps: PointSet, g=None) -> bool:
    g = g if g is not None else build_pvg(ps)
    if has_k4(g) is None:
        return False
    return all(find_triangle(g, g.rows[h]) is None for h in convex_hull(ps).vertices)


def reduced_family(count: int, seed: int, coord: int = 20, max_tries: int | None = None) -> list:
    """Reduced point sets whose PVG is not 3-colourable.

    Such sets are vanishingly rare among random lattice sets; this samples a
    nine-point family instead.  Take a triangle with one point on each side;
    each outer vertex is where one side's line meets the line through the
    two side points not on it.  Random rational choices are kept only when
    the result really is reduced and contains a 4-clique.
    """
    rng = random.Random(seed)
    out, seen = [], set()
    tries = 0
    max_tries = max_tries if max_tries is not None else 50 * count
    while len(out) < count and tries < max_tries:
        tries += 1
        tri = [(Fraction(rng.randint(-coord, coord)), Fraction(rng.randint(-coord, coord))) for _ in range(3)]
        t = [Fraction(rng.randint(1, 9), 10) for _ in range(3)]
        m01, m12, m20 = _along(tri[0], tri[1], t[0]), _along(tri[1], tri[2], t[1]), _along(tri[2], tri[0], t[2])
        outer = [
            _line_meet(tri[0], tri[1], m20, m12),
            _line_meet(tri[1], tri[2], m01, m20),
            _line_meet(tri[2], tri[0], m12, m01),
        ]
        if None in outer:
            continue
        try:
            ps = PointSet(tri + [m01, m12, m20] + outer)
        except DuplicatePoints:
            continue
        key = frozenset(ps.points)
        if key in seen or not is_reduced_non_3_colourable(ps):
            continue
        seen.add(key)
        out.append(ps)
    return out
