"""Static SVG 1.1 rendering of a point set and its visibility edges."""
from __future__ import annotations

from xml.sax.saxutils import escape

from .geometry import PointSet
from .graph import VisibilityGraph

PALETTE = ["#d62728", "#1f77b4", "#2ca02c", "#ffbf00", "#9467bd", "#8c564b", "#e377c2", "#17becf"]


def render_svg(ps: PointSet, g: VisibilityGraph, colours=None, size=600, margin=20, radius=4.0, title=None) -> str:
    xs = [float(p.x) for p in ps]
    ys = [float(p.y) for p in ps]
    w = (max(xs) - min(xs)) or 1.0
    h = (max(ys) - min(ys)) or 1.0
    scale = (size - 2 * margin) / max(w, h)
    width = w * scale + 2 * margin
    height = h * scale + 2 * margin

    def at(i):
        # SVG y grows downward
        return margin + (xs[i] - min(xs)) * scale, margin + (max(ys) - ys[i]) * scale

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.1f}" height="{height:.1f}" '
        f'viewBox="0 0 {width:.1f} {height:.1f}">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append('<g stroke="#999999" stroke-width="0.6">')
    for i, j in g.edges():
        (x1, y1), (x2, y2) = at(i), at(j)
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}"/>')
    out.append("</g>")
    out.append('<g stroke="black" stroke-width="0.8">')
    for i in range(len(ps)):
        x, y = at(i)
        fill = "white" if colours is None else PALETTE[colours[i] % len(PALETTE)]
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{radius}" fill="{fill}"><title>{i}</title></circle>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
