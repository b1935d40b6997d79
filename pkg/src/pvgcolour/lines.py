"""Three parallel lines with blockers on the middle one.

Points live on two outer lines at integer positions; the middle line is put
at a rational offset where no two outer-to-outer segments cross, so a blocker
placed where a segment meets it sits on that segment alone.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import GeometryDegeneracy

WIDTH = 2  # distance between the outer lines


@dataclass(frozen=True)
class MiddleLine:
    offset: Fraction  # distance from the first outer line, strictly inside (0, WIDTH)
    k: int
    q: int


def _distinct_heights(first, second, k, q):
    seen = set()
    for a in first:
        aq = a * q
        for b in second:
            h = aq + (b - a) * k
            if h in seen:
                return False
            seen.add(h)
    return True


def choose_middle_line(first, second, max_q: int | None = None) -> MiddleLine:
    """Smallest-denominator offset ``WIDTH * k / q`` keeping every crossing off the line.

    Two segments meet the middle line at the same height exactly when they
    cross there, so it suffices that all segment heights be distinct.
    """
    first, second = list(first), list(second)
    span = max(first + second) - min(first + second) + 2
    max_q = max_q if max_q is not None else 2 * span + 4
    for q in range(2, max_q + 1):
        for k in range(1, q):
            if math.gcd(k, q) == 1 and _distinct_heights(first, second, k, q):
                return MiddleLine(Fraction(WIDTH * k, q), k, q)
    raise GeometryDegeneracy("no admissible middle-line offset in the search window")


def blocker_position(a, b, line: MiddleLine) -> Fraction:
    """Position along the middle line of the segment from ``a`` (first line) to ``b`` (second line)."""
    return a + Fraction((b - a) * line.k, line.q)
