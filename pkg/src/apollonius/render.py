"""SVG 1.1 drawing of a configuration and its solutions."""

from __future__ import annotations

from xml.sax.saxutils import quoteattr

from .objects import Circle, DegeneratePoint, Line, Point, PointAtInfinity

SIZE = 600
_PALETTE = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"]


def _bounds(objects):
    xs, ys = [], []
    for o in objects:
        if isinstance(o, Circle):
            r = float(o.radius)
            xs += [float(o.cx) - r, float(o.cx) + r]
            ys += [float(o.cy) - r, float(o.cy) + r]
        elif isinstance(o, (Point, DegeneratePoint)):
            xs.append(float(o.x))
            ys.append(float(o.y))
        elif isinstance(o, Line):
            # the foot of the perpendicular from the origin
            xs.append(float(o.nx * o.d))
            ys.append(float(o.ny * o.d))
    if not xs:
        return -1.0, -1.0, 1.0, 1.0
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1e-9)
    pad = 0.15 * span
    cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
    half = span / 2 + pad
    return cx - half, cy - half, cx + half, cy + half


def _fmt(v: float) -> str:
    return f"{v:.6g}"


def render_svg(objects, solutions=()) -> bytes:
    """Input objects in black, each solution in its own colour and dashing."""
    x0, y0, x1, y1 = _bounds(objects)
    # let moderately larger solutions widen the view, but not huge ones
    sx0, sy0, sx1, sy1 = _bounds([s for s in solutions if not isinstance(s, PointAtInfinity)] + list(objects))
    span = x1 - x0
    grow = lambda a, b, lo: max(a, b) if lo else min(a, b)  # noqa: E731
    x0, y0 = grow(sx0, x0 - span, True), grow(sy0, y0 - span, True)
    x1, y1 = grow(sx1, x1 + span, False), grow(sy1, y1 + span, False)
    side = max(x1 - x0, y1 - y0)
    unit = side / SIZE
    stroke = _fmt(2 * unit)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="{_fmt(x0)} {_fmt(-y0 - side)} {_fmt(side)} {_fmt(side)}">',
        '<g transform="scale(1,-1)" fill="none">',
    ]

    def draw(o, colour, dash, cls):
        attrs = f'stroke={quoteattr(colour)} stroke-width="{stroke}" class="{cls}"'
        if dash:
            attrs += f' stroke-dasharray="{_fmt(6 * unit)},{_fmt(3 * unit)}"'
        if isinstance(o, Circle):
            parts.append(
                f'<circle cx="{_fmt(float(o.cx))}" cy="{_fmt(float(o.cy))}" '
                f'r="{_fmt(float(o.radius))}" {attrs}/>'
            )
        elif isinstance(o, Line):
            nx, ny, d = float(o.nx), float(o.ny), float(o.d)
            px, py = nx * d, ny * d
            L = 4 * side + abs(px) + abs(py)
            parts.append(
                f'<line x1="{_fmt(px - ny * L)}" y1="{_fmt(py + nx * L)}" '
                f'x2="{_fmt(px + ny * L)}" y2="{_fmt(py - nx * L)}" {attrs}/>'
            )
        elif isinstance(o, (Point, DegeneratePoint)):
            parts.append(
                f'<circle cx="{_fmt(float(o.x))}" cy="{_fmt(float(o.y))}" r="{_fmt(4 * unit)}" '
                f'fill={quoteattr(colour)} {attrs}/>'
            )

    for o in objects:
        draw(o, "#000000", False, "object")
    for n, s in enumerate(solutions):
        draw(s, _PALETTE[n % len(_PALETTE)], n >= len(_PALETTE), "solution")
    parts += ["</g>", "</svg>", ""]
    return "\n".join(parts).encode("utf-8")

