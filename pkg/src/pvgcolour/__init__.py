"""Exact colouring toolkit for point visibility graphs."""
from .errors import PVGError
from .four_colour import decide_four_colouring, reduce
from .geometry import Point, PointSet, build_pvg, convex_hull, orientation, point, ray_fan, strictly_between, visible
from .graph import VisibilityGraph, chromatic_number, clique_number, has_k4, is_valid_colouring, k_colourable
from .three_colour import classify_form, three_colourable, two_colourable

__all__ = [
    "PVGError",
    "Point",
    "PointSet",
    "VisibilityGraph",
    "build_pvg",
    "chromatic_number",
    "classify_form",
    "clique_number",
    "convex_hull",
    "decide_four_colouring",
    "has_k4",
    "is_valid_colouring",
    "k_colourable",
    "orientation",
    "point",
    "ray_fan",
    "reduce",
    "strictly_between",
    "three_colourable",
    "two_colourable",
    "visible",
]
