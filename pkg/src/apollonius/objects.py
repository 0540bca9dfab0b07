"""Plain geometric objects: the inputs of the problem and its solutions.

Input objects are :class:`Point`, :class:`Circle` and :class:`Line`.
Solutions reuse :class:`Circle` and :class:`Line` and add
:class:`DegeneratePoint` (a radius-zero solution, i.e. a double point) and
:class:`PointAtInfinity` (a double point pulled back through an inversion).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ._numeric import Scalar, exact_sqrt, is_exact, sign


@dataclass(frozen=True)
class Point:
    x: Scalar
    y: Scalar

    kind = "point"

    @property
    def center(self) -> tuple[Scalar, Scalar]:
        return (self.x, self.y)

    @property
    def radius(self) -> Scalar:
        return 0


@dataclass(frozen=True)
class Circle:
    cx: Scalar
    cy: Scalar
    radius: Scalar

    kind = "circle"

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError(f"circle radius must be positive, got {self.radius}")

    @property
    def center(self) -> tuple[Scalar, Scalar]:
        return (self.cx, self.cy)


@dataclass(frozen=True)
class Line:
    """The line ``nx*x + ny*y = d`` with a unit normal."""

    nx: Scalar
    ny: Scalar
    d: Scalar

    kind = "line"

    @classmethod
    def from_normal(cls, nx: Scalar, ny: Scalar, d: Scalar) -> "Line":
        """Normalize an arbitrary nonzero normal.

        Exact inputs must have a rational normal length (e.g. ``(3, 4)``);
        otherwise the unit normal would be irrational.
        """
        n2 = nx * nx + ny * ny
        if n2 == 0:
            raise ValueError("line normal must be nonzero")
        if is_exact(nx, ny, d):
            norm = exact_sqrt(Fraction(n2))
            if norm is None:
                raise ValueError(
                    f"normal ({nx}, {ny}) has irrational length; use a rational unit normal "
                    "or float mode"
                )
        else:
            norm = math.sqrt(float(n2))
        return cls(nx / norm, ny / norm, d / norm)

    def canonical(self) -> "Line":
        """Representative with the normal in the half-plane nx > 0 (or nx == 0, ny > 0)."""
        if sign(self.nx) < 0 or (sign(self.nx) == 0 and sign(self.ny) < 0):
            return Line(-self.nx, -self.ny, -self.d)
        return self

    def offset(self, x: Scalar, y: Scalar) -> Scalar:
        """Signed distance of ``(x, y)`` from the line."""
        return self.nx * x + self.ny * y - self.d


@dataclass(frozen=True)
class DegeneratePoint:
    x: Scalar
    y: Scalar

    kind = "degenerate_point"


@dataclass(frozen=True)
class PointAtInfinity:
    kind = "point_at_infinity"


ApolloniusObject = Union[Point, Circle, Line]
SolutionObject = Union[Circle, Line, DegeneratePoint, PointAtInfinity]


def same_object(a: ApolloniusObject, b: ApolloniusObject) -> bool:
    """Exact (or tolerance-based, for floats) identity of unoriented objects."""
    if a.kind != b.kind:
        return False
    if isinstance(a, Line):
        a, b = a.canonical(), b.canonical()
        vals = [(a.nx, b.nx), (a.ny, b.ny), (a.d, b.d)]
    elif isinstance(a, Circle):
        vals = [(a.cx, b.cx), (a.cy, b.cy), (a.radius, b.radius)]
    else:
        vals = [(a.x, b.x), (a.y, b.y)]
    return all(sign(u - v, abs(u) + abs(v) + 1) == 0 for u, v in vals)


def object_to_dict(obj) -> dict:
    """JSON-friendly description; exact values are rendered as ``p/q`` strings."""

    def num(v):
        if isinstance(v, (Fraction, int)):
            v = Fraction(v)
            return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return float(v)

    if isinstance(obj, Point):
        return {"type": "point", "x": num(obj.x), "y": num(obj.y)}
    if isinstance(obj, Circle):
        return {"type": "circle", "cx": num(obj.cx), "cy": num(obj.cy), "r": num(obj.radius)}
    if isinstance(obj, Line):
        return {"type": "line", "nx": num(obj.nx), "ny": num(obj.ny), "d": num(obj.d)}
    if isinstance(obj, DegeneratePoint):
        return {"type": "degenerate_point", "x": num(obj.x), "y": num(obj.y)}
    if isinstance(obj, PointAtInfinity):
        return {"type": "point_at_infinity"}
    raise TypeError(f"unknown object {obj!r}")
