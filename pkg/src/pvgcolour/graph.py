"""Graph side of the toolkit: bitset adjacency plus exact exponential oracles.

Adjacency rows are Python ints used as bitsets (bit ``j`` of ``rows[i]`` set
iff ``i`` and ``j`` see each other).  The oracles here are deliberately
independent of any geometry; they are what the polynomial algorithms are
differentially tested against.
"""
from __future__ import annotations

import itertools
import sys
from typing import Iterable, Sequence

from .errors import BudgetExceeded, SizeMismatch


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VisibilityGraph:
    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]):
        if len(rows) != n:
            raise ValueError("need one adjacency row per vertex")
        self.n = n
        self.rows = tuple(rows)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "VisibilityGraph":
        rows = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at {i}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, rows)

    def __eq__(self, other):
        return isinstance(other, VisibilityGraph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"VisibilityGraph(n={self.n}, m={self.edge_count()})"

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def neighbours(self, i: int) -> list:
        return list(_bits(self.rows[i]))

    def degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    def edges(self) -> list:
        return [(i, j) for i in range(self.n) for j in _bits(self.rows[i] >> (i + 1) << (i + 1))]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def induced(self, vertices: Sequence[int]) -> "VisibilityGraph":
        """Subgraph on ``vertices``, renumbered in the given order."""
        pos = {v: k for k, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            r = 0
            for u in _bits(self.rows[v]):
                k = pos.get(u)
                if k is not None:
                    r |= 1 << k
            rows.append(r)
        return VisibilityGraph(len(vertices), rows)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.rows[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1


def _popcount(x: int) -> int:
    return x.bit_count()


def is_valid_colouring(g: VisibilityGraph, colours: Sequence[int]) -> bool:
    if len(colours) != g.n:
        raise SizeMismatch(f"colouring has {len(colours)} entries, graph has {g.n} vertices")
    for i in range(g.n):
        ci = colours[i]
        for j in _bits(g.rows[i] >> (i + 1) << (i + 1)):
            if colours[j] == ci:
                return False
    return True


def canonical(colours: Sequence[int]) -> tuple:
    """Relabel colours in order of first appearance (one representative per permutation class)."""
    names = {}
    return tuple(names.setdefault(c, len(names)) for c in colours)


def triangle_free(g: VisibilityGraph) -> bool:
    for i in range(g.n):
        higher = g.rows[i] >> (i + 1) << (i + 1)
        for j in _bits(higher):
            if g.rows[j] & higher:
                return False
    return True


def find_triangle(g: VisibilityGraph, within: int | None = None):
    """First triangle (lexicographic) among the vertices of bitmask ``within``."""
    within = (1 << g.n) - 1 if within is None else within
    for a in _bits(within):
        ra = g.rows[a] & within & ~((1 << (a + 1)) - 1)
        for b in _bits(ra):
            common = ra & g.rows[b] & ~((1 << (b + 1)) - 1)
            if common:
                c = (common & -common).bit_length() - 1
                return a, b, c
    return None


def has_k4(g: VisibilityGraph):
    """A 4-clique witness ``(a, b, c, d)`` or ``None``."""
    rows = g.rows
    for a in range(g.n):
        ra = rows[a] >> (a + 1) << (a + 1)
        for b in _bits(ra):
            rab = ra & rows[b] & ~((1 << (b + 1)) - 1)
            for c in _bits(rab):
                rabc = rab & rows[c] & ~((1 << (c + 1)) - 1)
                if rabc:
                    return a, b, c, (rabc & -rabc).bit_length() - 1
    return None


class _Budget:
    __slots__ = ("left",)

    def __init__(self, budget):
        self.left = budget

    def tick(self):
        if self.left is not None:
            self.left -= 1
            if self.left < 0:
                raise BudgetExceeded("colouring search exceeded its node budget")


def _colour_search(g, k, fixed, budget, enumerate_all, cap, symmetry):
    """Backtracking with forward checking.

    Vertex choice is most-constrained-first with highest degree as the tie
    break.  ``symmetry`` restricts every new colour to at most one more than
    the largest colour used so far, which yields exactly one colouring per
    permutation class.
    """
    n = g.n
    rows = g.rows
    full = (1 << k) - 1
    colours = [-1] * n
    domains = [full] * n
    degree = [_popcount(r) for r in rows]
    out = []
    for v, c in (fixed or {}).items():
        if not domains[v] >> c & 1:
            return out
        colours[v] = c
        domains[v] = 1 << c
        for u in _bits(rows[v]):
            domains[u] &= ~(1 << c)
            if colours[u] == c:
                return out
    for v in range(n):
        if colours[v] < 0 and not domains[v]:
            return out
    top = max((c for c in colours if c >= 0), default=-1)
    uncoloured = n - sum(1 for c in colours if c >= 0)

    def pick():
        best = -1
        best_key = None
        for v in range(n):
            if colours[v] < 0:
                key = (_popcount(domains[v]), -degree[v])
                if best_key is None or key < best_key:
                    best, best_key = v, key
        return best

    def rec(left, top):
        budget.tick()
        if left == 0:
            out.append(tuple(colours))
            return not enumerate_all or (cap is not None and len(out) >= cap)
        v = pick()
        dom = domains[v]
        if symmetry:
            dom &= (1 << min(k, top + 2)) - 1
        for c in _bits(dom):
            bit = 1 << c
            touched = []
            ok = True
            for u in _bits(rows[v]):
                if colours[u] < 0 and domains[u] & bit:
                    domains[u] &= ~bit
                    touched.append(u)
                    if not domains[u]:
                        ok = False
                        break
            if ok:
                colours[v] = c
                saved = domains[v]
                domains[v] = bit
                if rec(left - 1, max(top, c)):
                    return True
                domains[v] = saved
                colours[v] = -1
            for u in touched:
                domains[u] |= bit
        return False

    if sys.getrecursionlimit() < n + 200:
        sys.setrecursionlimit(n + 200)
    rec(uncoloured, top)
    return out


def k_colourable(
    g: VisibilityGraph,
    k: int,
    budget: int | None = None,
    enumerate_all: bool = False,
    cap: int | None = None,
    fixed: dict | None = None,
):
    """Exact k-colouring oracle.

    Returns one valid colouring (a tuple) or ``None``.  With
    ``enumerate_all`` it instead returns the list of every valid colouring,
    without symmetry breaking, stopping after ``cap`` of them.  ``fixed``
    pins some vertices to given colours (symmetry breaking is then off).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n == 0:
        return [()] if enumerate_all else ()
    b = _Budget(budget)
    symmetry = not enumerate_all and not fixed
    found = _colour_search(g, k, fixed, b, enumerate_all, cap, symmetry)
    if enumerate_all:
        return found
    return found[0] if found else None


def colourings_up_to_permutation(g: VisibilityGraph, k: int, cap: int | None = None, budget: int | None = None) -> list:
    """Every valid colouring with at most ``k`` colours, one per permutation class, canonical form."""
    if g.n == 0:
        return [()]
    found = _colour_search(g, k, None, _Budget(budget), True, cap, True)
    return [canonical(c) for c in found]


def greedy_colouring(g: VisibilityGraph) -> list:
    order = sorted(range(g.n), key=lambda v: -_popcount(g.rows[v]))
    colours = [-1] * g.n
    for v in order:
        used = {colours[u] for u in _bits(g.rows[v])}
        c = 0
        while c in used:
            c += 1
        colours[v] = c
    return colours


def chromatic_number(g: VisibilityGraph, budget: int | None = None) -> int:
    """Binary search on k between the clique number and a greedy bound."""
    if g.n == 0:
        return 0
    lo = clique_number(g, budget=budget)
    hi = max(greedy_colouring(g)) + 1
    while lo < hi:
        mid = (lo + hi) // 2
        if k_colourable(g, mid, budget=budget) is not None:
            hi = mid
        else:
            lo = mid + 1
    return lo


def max_clique(g: VisibilityGraph, budget: int | None = None) -> list:
    """Maximum clique by branch and bound with a greedy-colouring bound."""
    rows = g.rows
    best = []
    b = _Budget(budget)

    def colour_bound(cand):
        # sequential greedy colouring of the candidate set; returns vertices
        # with their colour numbers in increasing order
        order = []
        c = 0
        left = cand
        while left:
            c += 1
            avail = left
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~rows[v] & ~(1 << v)
                left &= ~(1 << v)
                order.append((v, c))
        return order

    def expand(clique, cand):
        nonlocal best
        b.tick()
        order = colour_bound(cand)
        for v, c in reversed(order):
            if len(clique) + c <= len(best):
                return
            clique.append(v)
            nxt = cand & rows[v]
            if nxt:
                expand(clique, nxt)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    if g.n:
        expand([], (1 << g.n) - 1)
    return sorted(best)


def clique_number(g: VisibilityGraph, budget: int | None = None) -> int:
    return len(max_clique(g, budget=budget))


def is_bipartite(g: VisibilityGraph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in _bits(g.rows[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def brute_force_colourable(g: VisibilityGraph, k: int):
    """Plain product enumeration; only for tiny graphs in tests."""
    for c in itertools.product(range(k), repeat=g.n):
        if is_valid_colouring(g, c):
            return c
    return None


bits = _bits
