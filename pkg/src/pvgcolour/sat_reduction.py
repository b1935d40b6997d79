"""3-SAT to PVG 5-colouring.

A formula is first compiled to the classic 3-colouring gadget graph (one
red/green pair per variable, a two-stage OR gadget per clause, and shared
``pr``/``pb`` points).  That graph is then laid out on two vertical lines,
with dummy points separating gadgets, and a third line in between carries one
blocker per unwanted cross-line pair.  Every middle-line point sees every
outer point, so the middle line costs exactly two extra colours.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotThreeSat, ParseError
from .geometry import Point, PointSet, build_pvg
from .graph import VisibilityGraph, bits, is_valid_colouring, k_colourable
from .lines import MiddleLine, blocker_position, choose_middle_line

RED, GREEN, BLUE = 0, 1, 2


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple  # tuples of three nonzero ints; -v is the negation of v
    # repeated literals are harmless to the construction, and over a single
    # variable they are unavoidable; the parser never sets this
    allow_repeats: bool = field(default=False, compare=False)

    def __post_init__(self):
        for cl in self.clauses:
            if len(cl) != 3 or (len(set(cl)) != 3 and not self.allow_repeats):
                raise NotThreeSat(f"clause {cl} does not have exactly three distinct literals")
            for lit in cl:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise NotThreeSat(f"literal {lit} outside variables 1..{self.num_vars}")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def satisfied_by(self, assignment) -> bool:
        """``assignment[i]`` is the truth value of variable ``i + 1``."""
        return all(any(assignment[abs(l) - 1] == (l > 0) for l in cl) for cl in self.clauses)

    def solve(self):
        """Brute-force satisfying assignment, or ``None``."""
        for values in itertools.product((False, True), repeat=self.num_vars):
            if self.satisfied_by(values):
                return values
        return None

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        lines += [" ".join(map(str, cl)) + " 0" for cl in self.clauses]
        return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    header = None
    literals = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            if header is not None:
                raise ParseError(f"line {lineno}: second header")
            m = re.fullmatch(r"p\s+cnf\s+(\d+)\s+(\d+)", line)
            if not m:
                raise ParseError(f"line {lineno}: malformed header {line!r}")
            header = int(m.group(1)), int(m.group(2))
            continue
        if header is None:
            raise ParseError(f"line {lineno}: clause before the 'p cnf' header")
        try:
            literals.extend(int(tok) for tok in line.split())
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer token in {line!r}") from None
    if header is None:
        raise ParseError("missing 'p cnf' header")
    n, m = header
    clauses, cur = [], []
    for lit in literals:
        if lit == 0:
            clauses.append(tuple(cur))
            cur = []
        elif abs(lit) > n:
            raise ParseError(f"literal {lit} exceeds declared variable count {n}")
        else:
            cur.append(lit)
    if cur:
        raise ParseError("last clause is not terminated by 0")
    if len(clauses) != m:
        raise ParseError(f"header declares {m} clauses, found {len(clauses)}")
    return CnfFormula(n, tuple(clauses))


# clause gadget members, in the order they are numbered in the gadget graph
GADGET = ("p3", "p4", "p5", "p7", "p8", "p9")


@dataclass(frozen=True)
class XiGraph:
    formula: CnfFormula
    labels: tuple  # "pr", "pb", "x3", "~x3", "c2.p7", ...
    edges: frozenset  # pairs (i, j) with i < j

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def graph(self) -> VisibilityGraph:
        return VisibilityGraph.from_edges(self.n, self.edges)


def literal_label(lit: int) -> str:
    return f"x{lit}" if lit > 0 else f"~x{-lit}"


def build_xi(f: CnfFormula) -> XiGraph:
    labels = ["pr", "pb"]
    for i in range(1, f.num_vars + 1):
        labels += [f"x{i}", f"~x{i}"]
    for j in range(1, f.num_clauses + 1):
        labels += [f"c{j}.{p}" for p in GADGET]
    pos = {lab: k for k, lab in enumerate(labels)}
    edges = set()

    def join(a, b):
        i, k = pos[a], pos[b]
        edges.add((min(i, k), max(i, k)))

    join("pr", "pb")
    for i in range(1, f.num_vars + 1):
        join("pb", f"x{i}")
        join("pb", f"~x{i}")
        join(f"x{i}", f"~x{i}")
    for j, (a, b, c) in enumerate(f.clauses, 1):
        g = {p: f"c{j}.{p}" for p in GADGET}
        p1, p2, p6 = literal_label(a), literal_label(b), literal_label(c)
        for u, v in [
            (p1, g["p3"]), (p2, g["p4"]), (g["p3"], g["p4"]), (g["p3"], g["p5"]), (g["p4"], g["p5"]),
            (g["p5"], g["p7"]), (p6, g["p8"]), (g["p7"], g["p8"]), (g["p7"], g["p9"]), (g["p8"], g["p9"]),
            (g["p9"], "pr"), (g["p9"], "pb"),
        ]:
            join(u, v)
    return XiGraph(f, tuple(labels), frozenset(edges))


@dataclass(frozen=True)
class ZetaEmbedding:
    xi: XiGraph
    points: PointSet
    roles: tuple
    lines: tuple  # "l1" | "l2" | "l3" per point
    ranks: tuple  # order along its line, 0 at the top
    xi_vertex: tuple  # gadget-graph vertex per point, None for dummies and blockers
    middle: MiddleLine
    blocked: dict = field(default_factory=dict)  # blocker index -> (l1 index, l3 index)

    def on(self, line: str) -> list:
        return [i for i, l in enumerate(self.lines) if l == line]

    def metadata(self) -> list:
        return [
            {"index": i, "line": self.lines[i], "role": self.roles[i], "rank": self.ranks[i]}
            for i in range(len(self.roles))
        ]

    def cross_edges(self) -> set:
        """Gadget edges joining an l1 point to an l3 point, as point-index pairs."""
        where = {v: i for i, v in enumerate(self.xi_vertex) if v is not None}
        out = set()
        for u, v in self.xi.edges:
            a, b = where[u], where[v]
            if self.lines[a] != self.lines[b]:
                out.add((a, b) if self.lines[a] == "l1" else (b, a))
        return out


def _role(label: str, line: str) -> str:
    if label in ("pr", "pb"):
        return label
    if label.startswith("x"):
        return f"var({label[1:]},+)"
    if label.startswith("~x"):
        return f"var({label[2:]},-)"
    clause, p = label[1:].split(".")
    return f"clause_{line}({clause},{p[1:]})"


def column_layouts(f: CnfFormula):
    """Top-to-bottom gadget labels (``None`` for dummies) of the two outer lines."""
    l1 = []
    for i in range(1, f.num_vars + 1):
        l1 += [f"x{i}", f"~x{i}", None]
    for j in range(1, f.num_clauses + 1):
        if j > 1:
            l1.append(None)
        l1 += [f"c{j}.p5", None, f"c{j}.p9"]
    l3 = ["pr", "pb", None]
    for j in range(1, f.num_clauses + 1):
        if j > 1:
            l3.append(None)
        l3 += [f"c{j}.p3", f"c{j}.p4", None, f"c{j}.p7", f"c{j}.p8"]
    # with no clauses the separating dummies have nothing to separate
    while l1 and l1[-1] is None:
        l1.pop()
    while l3 and l3[-1] is None:
        l3.pop()
    return l1, l3


def place_three_lines(col1, col3, keep, vertical=True):
    """Coordinates for two outer columns plus blockers for every pair not in ``keep``.

    ``col1``/``col3`` are top-to-bottom lists (left-to-right when not
    ``vertical``); ``keep`` holds ``(i, j)``
    position pairs (``i`` in col1, ``j`` in col3) that must stay visible.
    Returns ``(points, lines, ranks, blocked, middle)``; the middle line
    holds blockers top to bottom.
    """
    h1 = [len(col1) - 1 - r for r in range(len(col1))]
    h3 = [len(col3) - 1 - r for r in range(len(col3))]
    middle = choose_middle_line(h1, h3)

    def at(offset, height):
        if vertical:
            return Point(Fraction(offset), Fraction(height))
        # horizontal: rank 0 is leftmost, first line on top
        return Point(-Fraction(height), Fraction(2 - offset))

    points = [at(0, h) for h in h1] + [at(2, h) for h in h3]
    lines = ["l1"] * len(col1) + ["l3"] * len(col3)
    ranks = list(range(len(col1))) + list(range(len(col3)))
    blockers = []
    for i in range(len(col1)):
        for j in range(len(col3)):
            if (i, j) not in keep:
                blockers.append((blocker_position(h1[i], h3[j], middle), i, j + len(col1)))
    blockers.sort(reverse=True)
    blocked = {}
    for r, (y, a, b) in enumerate(blockers):
        blocked[len(points)] = (a, b)
        points.append(at(middle.offset, y))
        lines.append("l2")
        ranks.append(r)
    return points, lines, ranks, blocked, middle


def build_zeta(f: CnfFormula) -> ZetaEmbedding:
    if f.num_vars < 1:
        raise ValueError("the embedding needs at least one variable")
    xi = build_xi(f)
    col1, col3 = column_layouts(f)
    pos = {lab: xi.index(lab) for lab in xi.labels}
    row1 = {lab: i for i, lab in enumerate(col1) if lab}
    row3 = {lab: j for j, lab in enumerate(col3) if lab}
    keep = set()
    for u, v in xi.edges:
        a, b = xi.labels[u], xi.labels[v]
        if a in row1 and b in row3:
            keep.add((row1[a], row3[b]))
        elif b in row1 and a in row3:
            keep.add((row1[b], row3[a]))
    points, lines, ranks, blocked, middle = place_three_lines(col1, col3, keep)
    roles, xi_vertex = [], []
    for col, line in ((col1, "l1"), (col3, "l3")):
        for lab in col:
            roles.append(_role(lab, line) if lab else f"dummy_{line}")
            xi_vertex.append(pos[lab] if lab else None)
    for k in sorted(blocked):
        a, b = blocked[k]
        roles.append(f"blocker({a},{b})")
        xi_vertex.append(None)
    return ZetaEmbedding(
        xi, PointSet(points), tuple(roles), tuple(lines), tuple(ranks), tuple(xi_vertex), middle, blocked
    )


def paper_blocker_count(n: int, m: int) -> int:
    """Closed-form middle-line count ``(3n+4m-1)(6m+2) - (9m+2n)`` quoted for the construction."""
    return (3 * n + 4 * m - 1) * (6 * m + 2) - (9 * m + 2 * n)


def xi_colouring(xi: XiGraph, assignment) -> list:
    """Proper red/green/blue colouring of the gadget graph from a satisfying assignment."""
    f = xi.formula
    col = [None] * xi.n
    col[xi.index("pr")] = RED
    col[xi.index("pb")] = BLUE
    for i, val in enumerate(assignment, 1):
        col[xi.index(f"x{i}")] = GREEN if val else RED
        col[xi.index(f"~x{i}")] = RED if val else GREEN
    g = xi.graph()
    for j in range(1, f.num_clauses + 1):
        members = [xi.index(f"c{j}.{p}") for p in GADGET]
        for choice in itertools.product((RED, GREEN, BLUE), repeat=6):
            for v, c in zip(members, choice):
                col[v] = c
            if all(col[u] != col[v] for v in members for u in bits(g.rows[v]) if col[u] is not None):
                break
        else:
            raise ValueError(f"clause {j} gadget cannot be coloured; assignment does not satisfy it")
    return col


def zeta_five_colouring(z: ZetaEmbedding, assignment) -> list:
    """Gadget points from :func:`xi_colouring`, dummies a free colour, middle line alternating 3/4."""
    xc = xi_colouring(z.xi, assignment)
    col = [None] * len(z.points)
    for i, v in enumerate(z.xi_vertex):
        if v is not None:
            col[i] = xc[v]
    for line in ("l1", "l3"):
        members = sorted(z.on(line), key=lambda i: z.ranks[i])
        for k, i in enumerate(members):
            if col[i] is None:
                around = {col[members[t]] for t in (k - 1, k + 1) if 0 <= t < len(members)}
                col[i] = min({RED, GREEN, BLUE} - around)
    for i in z.on("l2"):
        col[i] = 3 + z.ranks[i] % 2
    return col


@dataclass
class ReductionReport:
    satisfiable: bool
    assignment: tuple | None
    outer_three_colourable: bool
    five_colourable: bool
    middle_sees_all_outer: bool
    middle_is_path: bool
    outer_lines_are_paths: bool
    cross_edges_match: bool
    cross_edge_count: int
    blocker_count: int
    paper_blocker_count: int
    five_colouring: list | None = None
    notes: list = field(default_factory=list)

    @property
    def structure_ok(self) -> bool:
        return self.middle_sees_all_outer and self.middle_is_path and self.outer_lines_are_paths and self.cross_edges_match

    @property
    def equivalent(self) -> bool:
        return self.satisfiable == self.outer_three_colourable == self.five_colourable

    def lines(self) -> list:
        out = [
            f"satisfiable: {self.satisfiable}",
            f"l1+l3 3-colourable: {self.outer_three_colourable}",
            f"PVG 5-colourable: {self.five_colourable}",
            f"structure: middle sees all={self.middle_sees_all_outer} middle path={self.middle_is_path} "
            f"outer paths={self.outer_lines_are_paths} cross edges match={self.cross_edges_match}",
            f"cross edges: {self.cross_edge_count}; blockers: {self.blocker_count} "
            f"(closed form {self.paper_blocker_count}, delta {self.blocker_count - self.paper_blocker_count})",
            f"equivalence: {'equivalent' if self.equivalent else 'NOT equivalent'}",
        ]
        return out + list(self.notes)


def _is_path(g: VisibilityGraph, order) -> bool:
    sub = g.induced(order)
    return sub.edge_count() == max(len(order) - 1, 0) and all(sub.adjacent(k, k + 1) for k in range(len(order) - 1))


def verify_reduction(
    f: CnfFormula, z: ZetaEmbedding, graph: VisibilityGraph | None = None, budget: int | None = 2_000_000
) -> ReductionReport:
    """Check the embedding against its gadget graph and the satisfiability of ``f``.

    The full PVG is the join of the middle-line path with the outer-line
    graph, so it is 5-colourable exactly when the outer part is
    3-colourable; the join structure itself is verified here.
    """
    g = graph if graph is not None else build_pvg(z.points)
    assignment = f.solve()
    l1, l2, l3 = (sorted(z.on(l), key=lambda i: z.ranks[i]) for l in ("l1", "l2", "l3"))
    outer = l1 + l3
    outer_mask = sum(1 << i for i in outer)
    sees_all = all(g.rows[i] & outer_mask == outer_mask for i in l2)
    middle_path = _is_path(g, l2)
    outer_paths = _is_path(g, l1) and _is_path(g, l3)
    l3_mask = sum(1 << i for i in l3)
    actual_cross = {(a, b) for a in l1 for b in bits(g.rows[a] & l3_mask)}
    wanted = z.cross_edges()
    outer_col = k_colourable(g.induced(outer), 3, budget=budget)
    report = ReductionReport(
        satisfiable=assignment is not None,
        assignment=assignment,
        outer_three_colourable=outer_col is not None,
        five_colourable=False,
        middle_sees_all_outer=sees_all,
        middle_is_path=middle_path,
        outer_lines_are_paths=outer_paths,
        cross_edges_match=actual_cross == wanted,
        cross_edge_count=len(wanted),
        blocker_count=len(l2),
        paper_blocker_count=paper_blocker_count(f.num_vars, f.num_clauses),
    )
    if assignment is not None:
        col = zeta_five_colouring(z, assignment)
        if is_valid_colouring(g, col):
            report.five_colouring = col
            report.five_colourable = True
        else:
            report.notes.append("explicit 5-colouring from the satisfying assignment is not proper")
    if not report.five_colourable:
        if sees_all and l2 and any(g.rows[i] & (1 << j) for i in l2 for j in l2):
            # join of a graph needing >= 2 colours with the outer part
            report.five_colourable = outer_col is not None
        else:
            report.notes.append("join structure missing; 5-colourability left undecided")
    return report
