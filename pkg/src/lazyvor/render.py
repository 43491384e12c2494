"""Deterministic SVG drawings of planar Voronoi cells.

Geometry stays exact up to the final text: every coordinate is mapped
linearly from the rational window to the viewBox and only then printed as a
decimal with 12 significant digits.
"""
from dataclasses import dataclass, field
from decimal import Context, Decimal
from fractions import Fraction
from functools import cmp_to_key

from .errors import RenderError
from .kernel import linalg as la
from .kernel.polyhedra import HRep, h_to_v

DISPLAY_DIGITS = 12
DEFAULT_STYLE = {
    "frame": "#000000",
    "stroke": "#1f3b73",
    "fill": "#dbe6f5",
    "site": "#b22222",
}
# Longer side of the drawing, in user units of the SVG canvas.
CANVAS_SIZE = 600


@dataclass(frozen=True)
class RenderScene:
    """A window ``(x0, y0, x1, y1)`` and cells given as ``(site, HRep)`` pairs.

    Each cell is clipped to the window before drawing, so unbounded cells are
    fine as long as the site itself is a 2D point.
    """

    window: tuple
    cells: tuple = ()
    styling: dict = field(default_factory=dict, compare=False)

    def style(self, key):
        return self.styling.get(key, DEFAULT_STYLE[key])


def format_decimal(x):
    """`x` rounded to 12 significant digits, in plain positional notation."""
    x = Fraction(x)
    if x == 0:
        return "0"
    ctx = Context(prec=DISPLAY_DIGITS)
    d = ctx.divide(Decimal(x.numerator), Decimal(x.denominator)).normalize(ctx)
    text = format(d, "f")
    return "0" if text in ("-0", "0") else text


def window_box(window):
    x0, y0, x1, y1 = la.vector(window)
    if x0 >= x1 or y0 >= y1:
        raise RenderError("window needs x0 < x1 and y0 < y1")
    return (x0, y0, x1, y1)


def _window_hrep(window):
    from .engine import box_hrep

    x0, y0, x1, y1 = window
    return box_hrep((x0, y0), (x1, y1))


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def polygon_order(vertices):
    """Vertices of a convex polygon in counter-clockwise order.

    Sorting is exact: points are compared by half-plane around the centroid
    and then by the sign of a cross product.  The start is the smallest
    vertex in lexicographic order.
    """
    pts = sorted(set(vertices))
    if len(pts) < 3:
        return pts
    c = (sum(p[0] for p in pts) / len(pts), sum(p[1] for p in pts) / len(pts))

    def half(p):
        dx, dy = p[0] - c[0], p[1] - c[1]
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp(a, b):
        ha, hb = half(a), half(b)
        if ha != hb:
            return ha - hb
        cr = _cross(c, a, b)
        return -1 if cr > 0 else (1 if cr < 0 else 0)

    ring = sorted(pts, key=cmp_to_key(cmp))
    start = ring.index(pts[0])
    return ring[start:] + ring[:start]


def render_svg(scene):
    """SVG text for `scene`; byte-identical for equal scenes."""
    window = window_box(scene.window)
    x0, y0, x1, y1 = window
    w, h = x1 - x0, y1 - y0
    span = max(w, h)
    scale = Fraction(CANVAS_SIZE) / span
    clip = _window_hrep(window)

    def px(p):
        # y grows downwards in SVG
        return format_decimal((p[0] - x0) * scale), format_decimal((y1 - p[1]) * scale)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{format_decimal(w * scale)}" '
        f'height="{format_decimal(h * scale)}" '
        f'viewBox="0 0 {format_decimal(w * scale)} {format_decimal(h * scale)}">',
        f'  <rect x="0" y="0" width="{format_decimal(w * scale)}" '
        f'height="{format_decimal(h * scale)}" fill="none" '
        f'stroke="{scene.style("frame")}" stroke-width="1"/>',
    ]
    cells = sorted(((la.vector(site), rep) for site, rep in scene.cells), key=lambda c: c[0])
    for site, rep in cells:
        if len(site) != 2 or rep.dim != 2:
            raise RenderError(f"only planar cells can be rendered, got dimension {rep.dim}")
        poly = polygon_order(h_to_v(HRep(2, rep.halfspaces + clip.halfspaces)).vertices)
        if len(poly) < 3:
            continue
        coords = [px(v) for v in poly]
        path = "M " + " L ".join(f"{x} {y}" for x, y in coords) + " Z"
        lines.append(f'  <path d="{path}" fill="{scene.style("fill")}" '
                     f'stroke="{scene.style("stroke")}" stroke-width="1"/>')
    for site, _ in cells:
        if x0 <= site[0] <= x1 and y0 <= site[1] <= y1:
            x, y = px(site)
            lines.append(f'  <circle cx="{x}" cy="{y}" r="3" fill="{scene.style("site")}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
