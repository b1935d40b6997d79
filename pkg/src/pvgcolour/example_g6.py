"""A PVG with clique number 4 and chromatic number 6.

Ten points ``p1..p10`` sit on one horizontal line; ``q1..q4`` and the
alternation ``r1, b1, r2, ..., r10`` on another; blockers on a middle line
leave only the prescribed cross joins.  The outer lines span a triangle-free
graph that needs four colours, and the middle line adds two more.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .geometry import PointSet, build_pvg
from .graph import (
    VisibilityGraph,
    bits,
    chromatic_number,
    is_valid_colouring,
    k_colourable,
    max_clique,
    triangle_free,
)
from .lines import MiddleLine
from .sat_reduction import place_three_lines


def declared_joins() -> list:
    """Cross-line joins as ``(l3 label, l1 label)`` pairs."""
    joins = [("q1", 1), ("q1", 4), ("q2", 2), ("q2", 5), ("q3", 6), ("q3", 9), ("q4", 7), ("q4", 10)]
    for i in range(1, 6):
        joins += [(f"r{i}", 1), (f"r{i}", 3), (f"r{i}", i + 5)]
    for i in range(6, 11):
        joins += [(f"r{i}", 1), (f"r{i}", 4), (f"r{i}", i)]
    return [(a, f"p{b}") for a, b in joins]


def bottom_labels() -> list:
    out = ["q1", "q2", "q3", "q4"]
    for i in range(1, 11):
        out.append(f"r{i}")
        if i < 10:
            out.append(f"b{i}")
    return out


@dataclass(frozen=True)
class G6Embedding:
    points: PointSet
    roles: tuple
    lines: tuple
    ranks: tuple
    joins: tuple  # declared cross joins as (l1 index, l3 index)
    middle: MiddleLine
    blocked: dict = field(default_factory=dict)

    def on(self, line: str) -> list:
        return [i for i, l in enumerate(self.lines) if l == line]

    def index(self, role: str) -> int:
        return self.roles.index(role)

    def metadata(self) -> list:
        return [
            {"index": i, "line": self.lines[i], "role": self.roles[i], "rank": self.ranks[i]}
            for i in range(len(self.roles))
        ]


def build_g6() -> G6Embedding:
    col1 = [f"p{i}" for i in range(1, 11)]
    col3 = bottom_labels()
    r1 = {lab: i for i, lab in enumerate(col1)}
    r3 = {lab: j for j, lab in enumerate(col3)}
    keep = {(r1[p], r3[q]) for q, p in declared_joins()}
    points, lines, ranks, blocked, middle = place_three_lines(col1, col3, keep, vertical=False)
    roles = col1 + col3 + [f"blocker({a},{b})" for a, b in (blocked[k] for k in sorted(blocked))]
    n1 = len(col1)
    joins = tuple(sorted((r1[p], n1 + r3[q]) for q, p in declared_joins()))
    return G6Embedding(PointSet(points), tuple(roles), tuple(lines), tuple(ranks), joins, middle, blocked)


@dataclass
class G6Report:
    outer_triangle_free: bool
    outer_three_colourable: bool
    outer_four_colouring: list | None
    outer_chromatic: int
    cross_joins_match: bool
    middle_sees_all_outer: bool
    middle_has_edge: bool
    clique_number: int
    max_clique: list
    chromatic_number: int
    six_colouring: list | None = None
    notes: list = field(default_factory=list)

    def lines(self) -> list:
        return [
            f"l1+l3 triangle-free: {self.outer_triangle_free}",
            f"l1+l3 3-colourable: {self.outer_three_colourable}",
            f"l1+l3 4-colourable: {self.outer_four_colouring is not None}",
            f"l1+l3 chromatic number: {self.outer_chromatic}",
            f"cross joins exactly as declared: {self.cross_joins_match}",
            f"middle line sees all outer points: {self.middle_sees_all_outer}",
            f"clique number: {self.clique_number} (witness {self.max_clique})",
            f"chromatic number: {self.chromatic_number}",
        ] + list(self.notes)


def verify_g6(e: G6Embedding, graph: VisibilityGraph | None = None, budget: int | None = 5_000_000) -> G6Report:
    g = graph if graph is not None else build_pvg(e.points)
    l1, l2, l3 = (e.on(l) for l in ("l1", "l2", "l3"))
    outer = l1 + l3
    outer_mask = sum(1 << i for i in outer)
    l3_mask = sum(1 << i for i in l3)
    actual = {(a, b) for a in l1 for b in bits(g.rows[a] & l3_mask)}
    sub = g.induced(outer)
    three = k_colourable(sub, 3, budget=budget)
    four = k_colourable(sub, 4, budget=budget)
    outer_chi = chromatic_number(sub, budget=budget)
    sees_all = all(g.rows[i] & outer_mask == outer_mask for i in l2)
    l2_mask = sum(1 << i for i in l2)
    middle_edge = any(g.rows[i] & l2_mask for i in l2)
    clique = max_clique(g, budget=budget)
    report = G6Report(
        outer_triangle_free=triangle_free(sub),
        outer_three_colourable=three is not None,
        outer_four_colouring=None if four is None else [four[k] for k in range(len(outer))],
        outer_chromatic=outer_chi,
        cross_joins_match=actual == set(e.joins),
        middle_sees_all_outer=sees_all,
        middle_has_edge=middle_edge,
        clique_number=len(clique),
        max_clique=clique,
        chromatic_number=outer_chi + 2 if sees_all and middle_edge else chromatic_number(g, budget=budget),
    )
    if four is not None and sees_all:
        col = [None] * len(e.points)
        for k, i in enumerate(outer):
            col[i] = four[k]
        for i in l2:
            col[i] = 4 + e.ranks[i] % 2
        if is_valid_colouring(g, col):
            report.six_colouring = col
        else:
            report.notes.append("explicit 6-colouring is not proper")
    return report
