"""Plane inversions used to remove lines from a configuration and to map
solutions back afterwards."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from ._numeric import Scalar, is_exact, sign
from .core import OrientedCircle
from .errors import CenterIncident
from .objects import Circle, DegeneratePoint, Line, Point, PointAtInfinity


@dataclass(frozen=True)
class Inversion:
    center: tuple[Scalar, Scalar]
    power_k2: Scalar = 1

    def __post_init__(self):
        if not self.power_k2 > 0:
            raise ValueError("inversion power must be positive")

    def point(self, x: Scalar, y: Scalar) -> tuple[Scalar, Scalar]:
        ox, oy = self.center
        dx, dy = x - ox, y - oy
        d2 = dx * dx + dy * dy
        if sign(d2, ox * ox + oy * oy + x * x + y * y + 1) == 0:
            raise CenterIncident("point coincides with the inversion center")
        f = self.power_k2 / d2
        return (ox + f * dx, oy + f * dy)


@dataclass(frozen=True)
class TransformRecord:
    steps: tuple[Inversion, ...] = field(default_factory=tuple)


def _center_power(inv: Inversion, cx: Scalar, cy: Scalar, r: Scalar) -> tuple[Scalar, Scalar]:
    """Power of the inversion center w.r.t. the circle, plus a magnitude for float ties."""
    ox, oy = inv.center
    dx, dy = cx - ox, cy - oy
    d2 = dx * dx + dy * dy
    return d2 - r * r, d2 + r * r


def _invert_circle(inv: Inversion, cx, cy, r, allow_lines: bool):
    """Image of the circle with center (cx, cy) and signed radius r.

    Returns ``(cx', cy', r')`` with the signed-radius rule: orientation flips
    when the center is outside the disk. Returns a Line when the circle passes
    through the center and ``allow_lines`` is set.
    """
    ox, oy = inv.center
    p, scale = _center_power(inv, cx, cy, r)
    if sign(p, scale) == 0:
        if not allow_lines:
            raise CenterIncident("circle passes through the inversion center")
        # image is the line through the images of points at distance 2r along the diameter;
        # equivalently n.(X - O) = k^2 / (2 |c - O|) with n the unit vector O->c
        dx, dy = cx - ox, cy - oy
        dist = abs(r)
        nx, ny = dx / dist, dy / dist
        off = inv.power_k2 / (2 * dist)
        return Line(nx, ny, nx * ox + ny * oy + off)
    f = inv.power_k2 / p
    return (ox + f * (cx - ox), oy + f * (cy - oy), -f * r)


def _invert_line(inv: Inversion, line: Line, allow_lines: bool):
    ox, oy = inv.center
    off = line.offset(ox, oy)  # n.O - d
    if sign(off, abs(line.d) + abs(ox) + abs(oy) + 1) == 0:
        if not allow_lines:
            raise CenterIncident("line passes through the inversion center")
        return line
    # foot of the perpendicular from O maps to the far end of a diameter through O
    f = -inv.power_k2 / (2 * off)
    return Circle(ox + f * line.nx, oy + f * line.ny, abs(f))


def invert_object(inv: Inversion, obj, allow_lines: bool = False):
    """Inversive image of a point, circle, line or solution object."""
    if isinstance(obj, Point):
        return Point(*inv.point(obj.x, obj.y))
    if isinstance(obj, DegeneratePoint):
        ox, oy = inv.center
        if sign((obj.x - ox) ** 2 + (obj.y - oy) ** 2, ox * ox + oy * oy + 1) == 0:
            if allow_lines:
                return PointAtInfinity()
            raise CenterIncident("point coincides with the inversion center")
        return DegeneratePoint(*inv.point(obj.x, obj.y))
    if isinstance(obj, PointAtInfinity):
        return DegeneratePoint(*inv.center)
    if isinstance(obj, Circle):
        image = _invert_circle(inv, obj.cx, obj.cy, obj.radius, allow_lines)
        if isinstance(image, Line):
            return image
        cx, cy, r = image
        return Circle(cx, cy, abs(r))
    if isinstance(obj, Line):
        return _invert_line(inv, obj, allow_lines)
    raise TypeError(f"cannot invert {obj!r}")


def oriented_image(inv: Inversion, c: OrientedCircle) -> OrientedCircle:
    """Image of an oriented circle; orientation is reversed iff the center lies outside it."""
    cx, cy, r = _invert_circle(inv, c.cx, c.cy, c.r, allow_lines=False)
    return OrientedCircle(cx, cy, r)


def on_object(x: Scalar, y: Scalar, obj) -> bool:
    """Incidence of the point ``(x, y)`` with a point, circle or line."""
    if isinstance(obj, Point):
        return sign(x - obj.x, abs(x) + abs(obj.x) + 1) == 0 and sign(
            y - obj.y, abs(y) + abs(obj.y) + 1
        ) == 0
    if isinstance(obj, Circle):
        dx, dy = x - obj.cx, y - obj.cy
        d2 = dx * dx + dy * dy
        r2 = obj.radius * obj.radius
        return sign(d2 - r2, d2 + r2) == 0
    if isinstance(obj, Line):
        return sign(obj.offset(x, y), abs(obj.d) + abs(x) + abs(y) + 1) == 0
    raise TypeError(f"unknown object {obj!r}")


def lattice_points():
    """Deterministic scan: denominators 1, 2, 3, ...; per denominator, points of a
    bounded disk in order of distance from the origin, ties broken by larger y
    then smaller x."""
    radius = 8
    for q in itertools.count(1):
        bound = radius * q
        pts = [
            (a, b)
            for a in range(-bound, bound + 1)
            for b in range(-bound, bound + 1)
            if a * a + b * b <= bound * bound
        ]
        pts.sort(key=lambda p: (p[0] * p[0] + p[1] * p[1], -p[1], p[0]))
        for a, b in pts:
            if q > 1 and all(v % q == 0 for v in (a, b)):
                continue  # already visited with a smaller denominator
            yield Fraction(a, q), Fraction(b, q)


def choose_inversion_center(config) -> tuple[Scalar, Scalar]:
    if not config:
        raise ValueError("empty configuration")
    exact = all(_object_is_exact(o) for o in config)
    for x, y in lattice_points():
        if not any(on_object(x, y, obj) for obj in config):
            return (x, y) if exact else (float(x), float(y))
    raise AssertionError("unreachable")  # pragma: no cover


def _object_is_exact(obj) -> bool:
    if isinstance(obj, Point):
        return is_exact(obj.x, obj.y)
    if isinstance(obj, Circle):
        return is_exact(obj.cx, obj.cy, obj.radius)
    return is_exact(obj.nx, obj.ny, obj.d)


def normalize_lines(config):
    """Invert once about a point off every object if any Line is present.

    Returns the line-free configuration and the record needed by :func:`pull_back`.
    """
    config = list(config)
    if not any(isinstance(o, Line) for o in config):
        return config, TransformRecord()
    center = choose_inversion_center(config)
    one = Fraction(1) if _object_is_exact(config[0]) else 1.0
    inv = Inversion(center, one)
    return [invert_object(inv, o) for o in config], TransformRecord((inv,))


def pull_back(record: TransformRecord, s):
    """Map a solution of the normalized configuration back to the original frame."""
    for inv in reversed(record.steps):
        s = invert_object(inv, s, allow_lines=True)
    return s


def apply(record: TransformRecord, s):
    for inv in record.steps:
        s = invert_object(inv, s, allow_lines=True)
    return s
