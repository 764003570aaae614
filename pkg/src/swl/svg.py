"""Deterministic SVG rendering of the cut polygons and their arc system.

One regular polygon per face laid out on a row, sides labeled by darts,
marked points at 1/3 and 2/3 of each side, strands as quadratic curves
pulled toward the center; holed faces get a hole circle and their arcs
run from the marked points to it.
"""

import math

from .arcsys import Anchor
from .surface import DISK

_R = 120.0
_PAD = 60.0


def _fmt(x):
    return f"{x:.2f}"


def _polygon_points(m, cx, cy):
    pts = []
    for i in range(m):
        ang = -math.pi / 2 + 2 * math.pi * i / m
        pts.append((cx + _R * math.cos(ang), cy + _R * math.sin(ang)))
    return pts


def emit_svg(complex_, arcs):
    faces = complex_.faces
    width = len(faces) * (2 * _R + _PAD) + _PAD
    height = 2 * _R + 2 * _PAD
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
    ]
    centers = {}
    corners = {}
    marked = {}
    for f in faces:
        m = len(f.sides)
        cx = _PAD + _R + f.id * (2 * _R + _PAD)
        cy = _PAD + _R
        centers[f.id] = (cx, cy)
        pts = _polygon_points(m, cx, cy)
        corners[f.id] = pts
        path = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
        out.append(f'<polygon points="{path}" fill="none" stroke="black"/>')
        if f.kind != DISK:
            out.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(_R / 4)}" '
                       'fill="none" stroke="black" stroke-dasharray="4 3"/>')
        for i, d in enumerate(f.sides):
            x0, y0 = pts[i]
            x1, y1 = pts[(i + 1) % m]
            name = complex_.generators[abs(d) - 1] + ("'" if d < 0 else "")
            lx, ly = (x0 + x1) / 2, (y0 + y1) / 2
            lx, ly = cx + 1.15 * (lx - cx), cy + 1.15 * (ly - cy)
            out.append(f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="12" '
                       f'text-anchor="middle">{name}</text>')
            for slot in (1, 2):
                t = slot / 3
                marked[(d, slot)] = (x0 + t * (x1 - x0), y0 + t * (y1 - y0))
    drawn = set()
    for point, partner in sorted(arcs.intra.items(),
                                 key=lambda kv: str(kv)):
        if isinstance(point, Anchor) or point in drawn:
            continue
        x0, y0 = marked[point]
        fid = complex_.side_of[point[0]][0]
        cx, cy = centers[fid]
        if isinstance(partner, Anchor):
            # arc from the marked point to the hole circle
            dx, dy = cx - x0, cy - y0
            norm = math.hypot(dx, dy) or 1.0
            hx, hy = cx - dx / norm * _R / 4, cy - dy / norm * _R / 4
            out.append(f'<path d="M {_fmt(x0)} {_fmt(y0)} L {_fmt(hx)} {_fmt(hy)}" '
                       'fill="none" stroke="blue"/>')
            drawn.add(point)
        else:
            x1, y1 = marked[partner]
            qx = (x0 + x1) / 2 + 0.25 * (cx - (x0 + x1) / 2)
            qy = (y0 + y1) / 2 + 0.25 * (cy - (y0 + y1) / 2)
            out.append(f'<path d="M {_fmt(x0)} {_fmt(y0)} Q {_fmt(qx)} {_fmt(qy)} '
                       f'{_fmt(x1)} {_fmt(y1)}" fill="none" stroke="blue"/>')
            drawn.add(point)
            drawn.add(partner)
    out.append("</svg>")
    return "\n".join(out) + "\n"
