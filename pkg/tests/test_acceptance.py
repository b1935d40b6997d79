"""Acceptance checks; each prints one PASS/FAIL line."""
import itertools
import math
import random
import time
from fractions import Fraction

import pytest

from pvgcolour.corpus import lattice_subsets, random_lattice_sets, reduced_family
from pvgcolour.example_g6 import build_g6, verify_g6
from pvgcolour.four_colour import decide_four_colouring, eight_candidates, hull_structure_checks
from pvgcolour.geometry import PointSet, Triple, build_pvg, build_pvg_naive, frontier_triples, strictly_between
from pvgcolour.graph import canonical, colourings_up_to_permutation, has_k4, is_valid_colouring, k_colourable
from pvgcolour.sat_reduction import CnfFormula, build_zeta, paper_blocker_count, verify_reduction
from pvgcolour.three_colour import three_colourable

# lattice-native reduced set found by annealing; kept alongside the sampled family
LATTICE_REDUCED = [(1, 0), (2, 1), (2, 2), (2, 4), (2, 5), (3, 4), (4, 3), (5, 4), (6, 4)]


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        assert ok, detail

    return emit


@pytest.fixture(scope="module")
def corpus():
    small = [PointSet(s) for s in lattice_subsets(4, 4, 8, per_size=1000, seed=1)]
    large = [PointSet(s) for s in random_lattice_sets(8, 9, 12, count=1000, seed=2)]
    assert len({frozenset(ps.points) for ps in small}) == len(small) >= 5000
    return [(ps, build_pvg(ps)) for ps in small + large]


def test_criterion_1_four_colouring_matches_oracle(corpus, report):
    mismatches = invalid = yes = 0
    t = time.perf_counter()
    for ps, g in corpus:
        col = decide_four_colouring(ps, g)
        oracle = k_colourable(g, 4)
        mismatches += (col is None) != (oracle is None)
        if col is not None:
            yes += 1
            invalid += not (is_valid_colouring(g, col) and max(col) <= 3)
    dt = time.perf_counter() - t
    report(
        1,
        mismatches == 0 and invalid == 0 and dt < 600,
        f"{len(corpus)} sets, {yes} 4-colourable, {mismatches} mismatches, {invalid} invalid colourings, {dt:.1f}s",
    )


def test_criterion_2_three_colourable_iff_no_k4(corpus, report):
    mismatches = sum((three_colourable(ps, g) is None) != (has_k4(g) is not None) for ps, g in corpus)
    report(2, mismatches == 0, f"{len(corpus)} sets, {mismatches} mismatches")


def test_criterion_3_reduced_set_structure(report):
    family = reduced_family(200, seed=2024) + [PointSet(LATTICE_REDUCED)]
    failures = []
    for k, ps in enumerate(family):
        g = build_pvg(ps)
        r = hull_structure_checks(ps, g, strict=False)
        oracle = set(colourings_up_to_permutation(g, 4))
        checks = {
            "three hull vertices": len(r.hull_vertices) == 3,
            "hull points are vertices": not r.failures,
            "no concave triple": all(
                t is not Triple.CONCAVE for fan in r.fans.values() for t in frontier_triples(ps, fan)
            ),
            "two big rays": all(len(fan.big_rays) >= 2 for fan in r.fans.values()),
            "big rays two-coloured": all(
                len({c[v] for v in fan.rays[b]}) == 2 for fan in r.fans.values() for b in fan.big_rays for c in oracle
            ),
            "candidates cover oracle": len(ps) > 14
            or oracle <= {canonical(c.assignment) for c in eight_candidates(ps, g, r) if c.valid},
        }
        failures += [(k, name) for name, ok in checks.items() if not ok]
    report(3, len(family) >= 200 and not failures, f"{len(family)} reduced non-3-colourable sets, failures {failures[:5]}")


def _formula(n, m, rng):
    clauses = []
    for _ in range(m):
        if n >= 3:
            vs = rng.sample(range(1, n + 1), 3)
            clauses.append(tuple(v * rng.choice((1, -1)) for v in vs))
        elif n == 2:
            v = rng.choice((1, 2))
            clauses.append((v, -v, 3 - v))
        else:
            clauses.append((1, 1, -1))
    return CnfFormula(n, tuple(clauses), allow_repeats=n == 1)


def test_criterion_4_reduction_counts(report):
    rng = random.Random(4)
    bad, deltas = [], {}
    for n, m in itertools.product(range(1, 5), range(1, 9)):
        z = build_zeta(_formula(n, m, rng))
        g = build_pvg(z.points)
        l1, l2, l3 = (z.on(line) for line in ("l1", "l2", "l3"))
        l3_mask = sum(1 << i for i in l3)
        cross = sum((g.rows[a] & l3_mask).bit_count() for a in l1)
        if len(l1) != 3 * n + 4 * m - 1 or len(l3) != 6 * m + 2 or len(l2) != len(l1) * len(l3) - cross:
            bad.append((n, m))
        deltas[(n, m)] = len(l2) - paper_blocker_count(n, m)
    observed = sorted({(m, d) for (_, m), d in deltas.items()})
    report(
        4,
        not bad,
        f"32 (n,m) cells, count failures {bad}; blocker delta vs closed form by m: {observed}",
    )


def test_criterion_5_reduction_equivalence(report):
    one = CnfFormula(3, ((1, 2, 3),))
    all_signs = CnfFormula(3, tuple(tuple(s * v for s, v in zip(sg, (1, 2, 3))) for sg in itertools.product((1, -1), repeat=3)))
    rng = random.Random(5)
    shifted = tuple(tuple(l + (1 if l > 0 else -1) for l in cl) for cl in all_signs.clauses)
    formulas = [
        one,
        all_signs,
        CnfFormula(4, all_signs.clauses + ((1, 2, 4),)),
        CnfFormula(4, shifted),
        CnfFormula(4, ((1, -2, 4),) + shifted + ((-1, 3, -4),)),
    ]
    while len(formulas) < 24:
        formulas.append(_formula(rng.choice((3, 4)), rng.randint(1, 6), rng))
    t = time.perf_counter()
    bad, sat = [], 0
    for k, f in enumerate(formulas):
        r = verify_reduction(f, build_zeta(f))
        explicit = not r.satisfiable or r.five_colouring is not None
        if not (r.equivalent and r.structure_ok and explicit):
            bad.append(k)
        sat += r.satisfiable
    dt = time.perf_counter() - t
    report(
        5,
        not bad and dt < 300,
        f"{len(formulas)} formulas ({sat} SAT, {len(formulas) - sat} UNSAT), failures {bad}, {dt:.1f}s",
    )


def test_criterion_6_g6(report):
    t = time.perf_counter()
    e = build_g6()
    g = build_pvg(e.points)
    r = verify_g6(e, g)
    dt = time.perf_counter() - t
    ok = (
        r.outer_triangle_free
        and not r.outer_three_colourable
        and r.outer_four_colouring is not None
        and r.cross_joins_match
        and r.middle_sees_all_outer
        and (r.clique_number, r.chromatic_number) == (4, 6)
        and r.six_colouring is not None
        and dt < 120
    )
    report(6, ok, f"omega={r.clique_number}, chi={r.chromatic_number}, triangle-free outer part, {dt:.1f}s")


def _timed(n, seed):
    rng = random.Random(seed)
    side = math.isqrt(4 * n) + 1
    ps = PointSet(rng.sample([(x, y) for x in range(side) for y in range(side)], n))
    best = math.inf
    for _ in range(3):
        t = time.perf_counter()
        decide_four_colouring(ps)
        best = min(best, time.perf_counter() - t)
    return best


def test_criterion_7_performance(report):
    times = {n: _timed(n, 70 + n) for n in (50, 100, 200)}
    slopes = [math.log(times[b] / times[a], 2) for a, b in ((50, 100), (100, 200))]
    overall = math.log(times[200] / times[50], 4)
    ok = times[200] < 60 and overall <= 4.5
    report(
        7,
        ok,
        f"times {', '.join(f'n={n}: {t:.3f}s' for n, t in times.items())}; "
        f"log-log slopes {slopes[0]:.2f}, {slopes[1]:.2f} (overall {overall:.2f})",
    )


def _between_by_definition(a, m, b):
    # m = a + t (b - a) for some 0 < t < 1
    dx, dy = b[0] - a[0], b[1] - a[1]
    if (dx, dy) == (0, 0):
        return False
    t = Fraction(m[0] - a[0], dx) if dx else Fraction(m[1] - a[1], dy)
    return 0 < t < 1 and (a[0] + t * dx, a[1] + t * dy) == tuple(m)


def test_criterion_8_geometry_kernel(corpus, report):
    rng = random.Random(8)
    disagreements = 0
    for _ in range(100_000):
        a, m, b = (tuple(rng.randint(0, 6) for _ in range(2)) for _ in range(3))
        ps = PointSet([a, m, b]) if len({a, m, b}) == 3 else None
        got = strictly_between(*ps.points) if ps else False
        disagreements += got != _between_by_definition(a, m, b)
    pvg_mismatch = sum(build_pvg(ps) != build_pvg_naive(ps) for ps, _ in corpus[::10])
    disconnected = sum(not g.is_connected() for _, g in corpus)
    affine_bad = 0
    for k in range(20):
        ps, g = corpus[rng.randrange(len(corpus))]
        while True:
            a, b, c, d = (Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(4))
            if a * d - b * c:
                break
        e, f = Fraction(rng.randint(-50, 50), rng.randint(1, 7)), Fraction(rng.randint(-50, 50), rng.randint(1, 7))
        moved = PointSet([(a * p.x + b * p.y + e, c * p.x + d * p.y + f) for p in ps])
        affine_bad += build_pvg(moved) != g
    ok = disagreements == 0 and pvg_mismatch == 0 and disconnected == 0 and affine_bad == 0
    report(
        8,
        ok,
        f"1e5 triples, {disagreements} predicate disagreements; {pvg_mismatch} PVG/naive mismatches; "
        f"{disconnected} disconnected of {len(corpus)}; {affine_bad}/20 affine maps changed the PVG",
    )
