from fractions import Fraction as F

import pytest

from pvgcolour.errors import EnumerationOverflow, PreconditionError, StructuralViolation
from pvgcolour.four_colour import (
    ENUMERATION_CAP,
    decide_four_colouring,
    eight_candidates,
    enumerate_reduced_plus_one,
    hull_structure_checks,
    reduce,
    reduced_is_reduced,
    reinsert,
)
from pvgcolour.geometry import PointSet, build_pvg, point
from pvgcolour.graph import canonical, colourings_up_to_permutation, is_valid_colouring, k_colourable

GRID3 = PointSet([(x, y) for x in range(3) for y in range(3)])
GRID4 = PointSet([(x, y) for x in range(4) for y in range(4)])

# triangle, one point on each side, and the three outer vertices where each
# side line meets the line through the other two side points
NINE = PointSet(
    [
        (4, -3),
        (0, 5),
        (-6, 2),
        (F(12, 5), F(1, 5)),
        (F(-24, 5), F(13, 5)),
        (2, -2),
        (F(64, 15), F(-53, 15)),
        (F(18, 5), F(34, 5)),
        (-12, 5),
    ]
)


def test_reduce_grid_trace():
    t = reduce(GRID3, check=True)
    assert [d.vertex for d in t.deletions] == [0, 1, 2, 3, 4]
    assert t.deletions[0].witness_k3 == (1, 3, 4)
    assert t.reduced_indices == (5, 6, 7, 8)
    assert t.replay() == t.reduced
    assert reduced_is_reduced(t.reduced)


def test_grid_colourings_frozen():
    assert decide_four_colouring(GRID3) == [3, 1, 3, 0, 2, 0, 3, 1, 3]
    assert decide_four_colouring(GRID4) == [1, 0, 1, 0, 3, 2, 3, 2, 1, 0, 1, 0, 3, 2, 3, 2]


def test_five_point_clique_is_not_four_colourable():
    ps = PointSet([(0, 0), (4, 0), (0, 4), (4, 4), (1, 2)])
    assert k_colourable(build_pvg(ps), 4) is None
    assert decide_four_colouring(ps) is None


def test_reduced_nine_point_set_structure():
    g = build_pvg(NINE)
    assert reduced_is_reduced(NINE, g)
    report = hull_structure_checks(NINE, g)
    assert report.ok
    assert report.hull_vertices == (8, 7, 6)
    for fan in report.fans.values():
        assert len(fan.big_rays) >= 2


def test_eight_candidates_match_oracle_on_nine_point_set():
    g = build_pvg(NINE)
    cands = eight_candidates(NINE, g)
    assert [(c.assignment, c.provenance, c.valid) for c in cands] == [
        ((3, 3, 3, 0, 2, 1, 2, 1, 0), (True, True, True), True),
        ((3, 3, 3, 2, 1, 0, 2, 1, 0), (False, False, False), True),
    ]
    oracle = set(colourings_up_to_permutation(g, 4))
    assert oracle == {(0, 0, 0, 1, 2, 3, 1, 2, 3), (0, 0, 0, 1, 2, 3, 2, 3, 1)}
    assert {canonical(c.assignment) for c in cands if c.valid} == oracle


def test_structure_checks_need_a_four_clique():
    with pytest.raises(PreconditionError):
        hull_structure_checks(PointSet([(0, 0), (1, 0), (2, 0), (1, 1)]))


def test_structure_checks_flag_square_hull():
    # the 4x4 grid contains K4 but is not reduced; its hull has four corners
    report = hull_structure_checks(GRID4, strict=False)
    assert ("three hull vertices", "hull has 4 vertices") in report.failures
    with pytest.raises(StructuralViolation):
        hull_structure_checks(GRID4)


def test_enumerate_reduced_plus_one():
    t = reduce(GRID3)
    p = t.deletions[-1].vertex
    cands = enumerate_reduced_plus_one(t.reduced, GRID3[p], p)
    joined = PointSet(list(t.reduced) + [GRID3[p]])
    oracle = set(colourings_up_to_permutation(build_pvg(joined), 4))
    assert {canonical(c.assignment) for c in cands} == oracle
    assert len(cands) <= ENUMERATION_CAP


def test_enumeration_overflow_on_unreduced_input():
    # a long line has far more than the cap of 4-colourings
    line = PointSet([(x, 0) for x in range(8)])
    with pytest.raises(EnumerationOverflow):
        enumerate_reduced_plus_one(line, point(0, 1))


def test_reinsert_rebuilds_a_valid_colouring():
    g = build_pvg(GRID3)
    t = reduce(GRID3, g)
    full = decide_four_colouring(GRID3, g)
    base = {i: full[i] for i in t.reduced_indices}
    assert reinsert(t, base, g) == full
    assert is_valid_colouring(g, full)
