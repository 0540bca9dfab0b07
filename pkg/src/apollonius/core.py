"""Oriented circles as points ``(cx, cy, r)`` of a Lorentz 3-space.

A positive radius means counterclockwise orientation, a negative one
clockwise, and zero is a point circle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ._numeric import Scalar, sign
from .errors import CoincidentCircles
from .objects import Circle, Point


@dataclass(frozen=True)
class OrientedCircle:
    cx: Scalar
    cy: Scalar
    r: Scalar

    @classmethod
    def from_object(cls, obj) -> "OrientedCircle":
        """Positively oriented circle of a :class:`Circle`, or point circle of a :class:`Point`."""
        if isinstance(obj, Circle):
            return cls(obj.cx, obj.cy, obj.radius)
        if isinstance(obj, Point):
            return cls(obj.x, obj.y, 0 * obj.x)
        raise TypeError(f"cannot orient {obj!r}")

    def __sub__(self, other: "OrientedCircle") -> tuple[Scalar, Scalar, Scalar]:
        return (self.cx - other.cx, self.cy - other.cy, self.r - other.r)


class PairRelation(enum.Enum):
    DISJOINT_OUTSIDE = "DisjointOutside"
    CROSS_SAME_SENSE = "CrossSameSense"
    CROSS_OPPOSITE_SENSE = "CrossOppositeSense"
    ONE_ENCLOSES_OTHER = "OneEnclosesOther"
    TANGENT_EXTERNAL = "TangentExternal"
    TANGENT_INTERNAL = "TangentInternal"
    COINCIDENT = "Coincident"


class Enclosure(enum.Enum):
    NO = "No"
    YES = "Yes"
    STRICTLY = "Strictly"


def lorentz_q(c) -> Scalar:
    """``x^2 + y^2 - r^2`` for an oriented circle or a raw ``(x, y, r)`` triple."""
    x, y, r = (c.cx, c.cy, c.r) if isinstance(c, OrientedCircle) else c
    return x * x + y * y - r * r


def _q_scale(v) -> Scalar:
    x, y, r = v
    return x * x + y * y + r * r


def power(c1: OrientedCircle, c2: OrientedCircle) -> Scalar:
    return lorentz_q(c1 - c2)


def power_sign(c1: OrientedCircle, c2: OrientedCircle) -> int:
    v = c1 - c2
    return sign(lorentz_q(v), _q_scale(v))


def reverse(c: OrientedCircle) -> OrientedCircle:
    return OrientedCircle(c.cx, c.cy, -c.r)


def radius_shift(c: OrientedCircle, t: Scalar) -> OrientedCircle:
    """Subtract ``(0, 0, t)``; pairwise powers are unchanged by a common shift."""
    return OrientedCircle(c.cx, c.cy, c.r - t)


def coincident(c1: OrientedCircle, c2: OrientedCircle) -> bool:
    """Same unoriented circle (or same point)."""
    dx, dy = c1.cx - c2.cx, c1.cy - c2.cy
    scale = abs(c1.cx) + abs(c1.cy) + abs(c2.cx) + abs(c2.cy) + abs(c1.r) + abs(c2.r) + 1
    return (
        sign(dx, scale) == 0
        and sign(dy, scale) == 0
        and sign(abs(c1.r) - abs(c2.r), scale) == 0
    )


def check_not_coincident(c1: OrientedCircle, c2: OrientedCircle) -> None:
    if coincident(c1, c2):
        raise CoincidentCircles(f"{c1} and {c2} are the same unoriented circle")


_RELATIONS = {
    (1, 1): PairRelation.DISJOINT_OUTSIDE,
    (1, -1): PairRelation.CROSS_SAME_SENSE,
    (-1, 1): PairRelation.CROSS_OPPOSITE_SENSE,
    (-1, -1): PairRelation.ONE_ENCLOSES_OTHER,
    (0, 1): PairRelation.TANGENT_EXTERNAL,
    (1, 0): PairRelation.TANGENT_EXTERNAL,
    (0, -1): PairRelation.TANGENT_INTERNAL,
    (-1, 0): PairRelation.TANGENT_INTERNAL,
}


def pair_relation(c1: OrientedCircle, c2: OrientedCircle) -> PairRelation:
    """Relative position read off the signs of ``P(c1, c2)`` and ``P(c1, reverse(c2))``.

    The two crossing rows depend on orientation: ``CrossSameSense`` means the
    given orientations agree at the crossing. Tangency rows do not depend on
    which of the two powers vanishes.
    """
    if sign(c1.r) == 0 or sign(c2.r) == 0:
        raise ValueError("pair_relation is defined for nonzero radii only")
    check_not_coincident(c1, c2)
    key = (power_sign(c1, c2), power_sign(c1, reverse(c2)))
    return _RELATIONS[key]


def is_tangent_oriented(c1: OrientedCircle, c2: OrientedCircle) -> bool:
    return power_sign(c1, c2) == 0


def tangent_count_oriented(c1: OrientedCircle, c2: OrientedCircle) -> int:
    """Number of common oriented tangent lines: 2, 1 or 0 as the power is >0, =0, <0."""
    if sign(c1.r) == 0 or sign(c2.r) == 0:
        raise ValueError("tangent_count_oriented is defined for nonzero radii only")
    check_not_coincident(c1, c2)
    return power_sign(c1, c2) + 1


def encloses(c1, c2) -> Enclosure:
    """Whether the disk of ``c1`` contains the disk of ``c2`` (radii taken unsigned).

    Compares ``dist`` with ``|r1| - |r2|`` through squares, which is exact.
    """
    c1 = c1 if isinstance(c1, OrientedCircle) else OrientedCircle.from_object(c1)
    c2 = c2 if isinstance(c2, OrientedCircle) else OrientedCircle.from_object(c2)
    gap = abs(c1.r) - abs(c2.r)
    if sign(gap, abs(c1.r) + abs(c2.r)) < 0:
        return Enclosure.NO
    dx, dy = c1.cx - c2.cx, c1.cy - c2.cy
    d2 = dx * dx + dy * dy
    s = sign(gap * gap - d2, gap * gap + d2)
    if s > 0:
        return Enclosure.STRICTLY
    if s == 0 and sign(gap, abs(c1.r) + abs(c2.r)) > 0:
        return Enclosure.YES
    return Enclosure.NO
