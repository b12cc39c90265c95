"""Static SVG pictures of planar polytopes and packings."""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import RenderDimension
from .packing import CoherentFamily
from .polytope import Polytope

FILLS = ["#8fb3d9", "#e3a66f", "#9fd49a", "#d98fb8", "#d9cf8f", "#a38fd9"]


def boundary_cycle(p: Polytope) -> list[int]:
    """Vertex indices in boundary order, starting at the first vertex."""
    adj = {i: p.neighbors(i) for i in range(len(p.vertices))}
    cycle = [0]
    prev = None
    while True:
        cur = cycle[-1]
        nxt = [j for j in adj[cur] if j != prev]
        nxt = min(nxt) if prev is None else nxt[0]
        if nxt == 0:
            return cycle
        prev = cur
        cycle.append(nxt)


def render_svg(p: Polytope, witness: CoherentFamily | None = None, scale: int = 60, margin: int = 24) -> str:
    if p.dim != 2:
        raise RenderDimension(f"can only render planar polytopes, got dimension {p.dim}")
    xs = [v[0] for v in p.vertices]
    ys = [v[1] for v in p.vertices]
    xmin, xmax, ymin, ymax = min(xs), max(xs), min(ys), max(ys)

    def px(x, y) -> str:
        return f"{float(margin + (Fraction(x) - xmin) * scale):.2f},{float(margin + (ymax - Fraction(y)) * scale):.2f}"

    width = float(2 * margin + (xmax - xmin) * scale)
    height = float(2 * margin + (ymax - ymin) * scale)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2f}" height="{height:.2f}" '
        f'viewBox="0 0 {width:.2f} {height:.2f}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    if witness is not None:
        for k, s in enumerate(witness.simplices):
            pts = " ".join(px(*v) for v in s.closure_vertices)
            far = " ".join(px(*v) for v in s.removed_face)
            out.append(f'<polygon points="{pts}" fill="{FILLS[k % len(FILLS)]}" fill-opacity="0.7" stroke="none"/>')
            out.append(f'<polyline points="{far}" fill="none" stroke="#555" stroke-width="1.5" stroke-dasharray="4 3"/>')
    outline = " ".join(px(*p.vertices[i]) for i in boundary_cycle(p))
    out.append(f'<polygon points="{outline}" fill="none" stroke="black" stroke-width="2"/>')
    for x in range(math.ceil(xmin), math.floor(xmax) + 1):
        for y in range(math.ceil(ymin), math.floor(ymax) + 1):
            inside = (x, y) in p
            cx, cy = px(x, y).split(",")
            color = "black" if inside else "#bbb"
            out.append(f'<circle cx="{cx}" cy="{cy}" r="3" fill="{color}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
