"""SVG drawing of a packing path with the circles lying below it.

Every step is drawn as a true 60 degree arc of radius 2 around its own
center, which may be a circle outside the lattice (the ``(0, 2)`` circle next
to the wall).  Output is byte-for-byte deterministic.
"""
from __future__ import annotations

import math
from pathlib import Path

from .geometry import circles_below
from .steps import PackingPath, Step, parse_path, vertices

SQRT3 = math.sqrt(3.0)
SCALE = 20.0
MARGIN = 3.0

# center of the arc relative to the start vertex, in integer (x, h) units
ARC_CENTER = {
    Step.U: (2, 0),
    Step.F: (1, -1),
    Step.D: (-1, -1),
    Step.Ub: (-1, 1),
    Step.Fb: (1, 1),
    Step.Db: (2, 0),
}

ARC_COLOR = {
    Step.U: "green",
    Step.F: "blue",
    Step.D: "red",
    Step.Ub: "brown",
    Step.Fb: "purple",
    Step.Db: "orange",
}


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


class _Frame:
    def __init__(self, width: int, top: int):
        self.w = (width + 2 * MARGIN) * SCALE
        self.h = ((top + 1) * SQRT3 + 2 * MARGIN) * SCALE
        self.top = top

    def pt(self, x: float, h: float) -> tuple[str, str]:
        px = (x + MARGIN) * SCALE
        py = ((self.top + 1) * SQRT3 + MARGIN - h * SQRT3) * SCALE
        return _fmt(px), _fmt(py)


def _sweep(start, end, center) -> int:
    # orientation in the upright plane; the SVG y axis points down
    ax, ay = start[0] - center[0], (start[1] - center[1]) * SQRT3
    bx, by = end[0] - center[0], (end[1] - center[1]) * SQRT3
    return 0 if ax * by - ay * bx > 0 else 1


def render_svg(path: PackingPath | str) -> str:
    if isinstance(path, str):
        path = parse_path(path)
    vs = vertices(path)
    width = max(path.width, 4)
    top = max([h for _, h in vs] + [2])
    fr = _Frame(width, top)
    r = _fmt(2 * SCALE)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(fr.w)}" height="{_fmt(fr.h)}">',
        '<g id="axes" stroke="black" stroke-width="1">',
    ]
    x0, y0 = fr.pt(-1, 0)
    x1, _ = fr.pt(width + 1, 0)
    _, yt = fr.pt(0, top + 1)
    ox, _ = fr.pt(0, 0)
    out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}"/>')
    out.append(f'<line x1="{ox}" y1="{y0}" x2="{ox}" y2="{yt}"/>')
    out.append("</g>")

    below = sorted(circles_below(path)) if path.ends_on_axis and path.nbsteps else []
    if below:
        out.append('<g id="circles" fill="lightgray" stroke="gray" stroke-width="1">')
        for c in below:
            cx, cy = fr.pt(c.x, c.h)
            out.append(f'<circle cx="{cx}" cy="{cy}" r="{r}"/>')
        out.append("</g>")

    if path.nbsteps:
        out.append('<g id="arcs" fill="none" stroke-width="3">')
        for s, a, b in zip(path.steps, vs, vs[1:]):
            dx, dh = ARC_CENTER[s]
            center = (a[0] + dx, a[1] + dh)
            sx, sy = fr.pt(*a)
            ex, ey = fr.pt(*b)
            sw = _sweep(a, b, center)
            out.append(
                f'<path class="{s.name}" stroke="{ARC_COLOR[s]}" d="M {sx} {sy} A {r} {r} 0 0 {sw} {ex} {ey}"/>'
            )
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(path: PackingPath | str, out: str | Path) -> Path:
    out = Path(out)
    out.write_text(render_svg(path), encoding="utf-8")
    return out
