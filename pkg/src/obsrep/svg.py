"""SVG rendering.  Coordinates become decimals here and only here."""
from __future__ import annotations

import itertools
from typing import Iterable, Sequence
from xml.sax.saxutils import escape

from .geom import ConvexObstacle, Point

SIZE = 480
MARGIN = 24


def _fmt(v: float) -> str:
    return f"{v:.3f}".rstrip("0").rstrip(".") or "0"


def render(points: Sequence[Point], obstacles: Iterable[ConvexObstacle] = (),
           edges: Iterable[tuple[int, int]] = (), inflate: float = 3.0, title: str = "") -> str:
    """SVG picture with edges (thin), obstacles (grey) and vertices (black).

    Point and segment obstacles are drawn inflated by ``inflate`` display
    units so that they remain visible.
    """
    obstacles = list(obstacles)
    coords = [(float(p.x), float(p.y)) for p in points]
    coords += [(float(v.x), float(v.y)) for o in obstacles for v in o.vertices]
    if not coords:
        coords = [(0.0, 0.0)]
    xs, ys = zip(*coords)
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    scale = (SIZE - 2 * MARGIN) / span

    def tx(x: float) -> str:
        return _fmt(MARGIN + (x - x0) * scale)

    def ty(y: float) -> str:
        return _fmt(SIZE - MARGIN - (y - y0) * scale)

    def xy(p: Point) -> tuple[str, str]:
        return tx(float(p.x)), ty(float(p.y))

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
           f'viewBox="0 0 {SIZE} {SIZE}">']
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append('<g stroke="#4477aa" stroke-width="0.8">')
    for u, v in edges:
        (ax, ay), (bx, by) = xy(points[u]), xy(points[v])
        out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"/>')
    out.append("</g>")
    out.append('<g fill="#999999" stroke="#555555" stroke-width="0.8">')
    r = _fmt(inflate)
    for o in obstacles:
        vs = [xy(v) for v in o.vertices]
        if len(vs) == 1:
            out.append(f'<circle cx="{vs[0][0]}" cy="{vs[0][1]}" r="{r}"/>')
        elif len(vs) == 2:
            out.append(f'<line x1="{vs[0][0]}" y1="{vs[0][1]}" x2="{vs[1][0]}" y2="{vs[1][1]}" '
                       f'stroke-width="{_fmt(2 * inflate)}" stroke-linecap="round"/>')
        else:
            pts = " ".join(f"{a},{b}" for a, b in vs)
            out.append(f'<polygon points="{pts}"/>')
    out.append("</g>")
    out.append('<g fill="black">')
    for p in points:
        cx, cy = xy(p)
        out.append(f'<circle cx="{cx}" cy="{cy}" r="3"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def complete_bipartite_edges(m: int, n: int) -> list[tuple[int, int]]:
    return [(i, m + j) for i, j in itertools.product(range(m), range(n))]


__all__ = ["render", "complete_bipartite_edges"]
