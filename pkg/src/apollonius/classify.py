"""Topological signature of a line-free configuration and the case tables
that map a signature to its number of Apollonius solutions."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

from ._numeric import Scalar, is_exact, sign, sqrt
from .core import Enclosure, encloses
from .errors import CoincidentObjects
from .objects import Circle, Point, same_object


class Special(enum.Enum):
    INFINITE = "infinite"
    IMPOSSIBLE = "impossible"

    def __repr__(self):
        return self.name


INFINITE = Special.INFINITE
IMPOSSIBLE = Special.IMPOSSIBLE

Count = Union[int, Special]


class IncidenceKind(enum.Enum):
    DISJOINT = "Disjoint"
    TANGENT = "Tangent"
    CROSSING = "Crossing"
    POINT_ON = "PointOn"
    POINT_OFF = "PointOff"
    POINTS_DISTINCT = "PointsDistinct"


@dataclass(frozen=True)
class PairIncidence:
    kind: IncidenceKind
    points: tuple = ()

    @property
    def size(self) -> int:
        return len(self.points)


class SeparatorKind(enum.Enum):
    NONE = "None"
    LARGE = "Large"
    STRICT = "Strict"


@dataclass(frozen=True)
class Separator:
    kind: SeparatorKind = SeparatorKind.NONE
    index: Optional[int] = None  # 0-based position in the configuration

    def __str__(self):
        if self.kind is SeparatorKind.NONE:
            return "None"
        return f"{self.kind.value}({self.index})"


NO_SEPARATOR = Separator()


@dataclass(frozen=True)
class TopoSignature:
    object_kinds: tuple[str, ...]  # sorted, e.g. ("circle", "circle", "point")
    distinct_intersections: int
    tangency_points: int
    double_points: int
    separator: Separator
    triple_tangent_at_common_point: bool

    @property
    def n_points(self) -> int:
        return self.object_kinds.count("point")


def _d2(a, b) -> Scalar:
    (ax, ay), (bx, by) = a, b
    return (ax - bx) ** 2 + (ay - by) ** 2


def _check_line_free(obj) -> None:
    if not isinstance(obj, (Point, Circle)):
        raise TypeError(f"expected Point or Circle (normalize lines first), got {obj!r}")


def _circle_circle(a: Circle, b: Circle) -> PairIncidence:
    (x1, y1), (x2, y2) = a.center, b.center
    r1, r2 = a.radius, b.radius
    d2 = _d2(a.center, b.center)
    s_out = (r1 + r2) ** 2
    s_in = (r1 - r2) ** 2
    scale = d2 + s_out
    ext = sign(d2 - s_out, scale)
    inn = sign(d2 - s_in, scale)
    if ext > 0 or inn < 0:
        return PairIncidence(IncidenceKind.DISJOINT)
    if ext == 0:
        t = r1 / (r1 + r2)
        return PairIncidence(IncidenceKind.TANGENT, ((x1 + t * (x2 - x1), y1 + t * (y2 - y1)),))
    if inn == 0:
        t = r1 / (r1 - r2)
        return PairIncidence(IncidenceKind.TANGENT, ((x1 + t * (x2 - x1), y1 + t * (y2 - y1)),))
    # crossing: chord midpoint M on the center line, half-chord h along the perpendicular
    a_ = (d2 + r1 * r1 - r2 * r2) / (2 * d2)
    mx, my = x1 + a_ * (x2 - x1), y1 + a_ * (y2 - y1)
    h2 = r1 * r1 / d2 - a_ * a_
    h = sqrt(h2)
    px, py = -(y2 - y1), x2 - x1
    return PairIncidence(
        IncidenceKind.CROSSING, ((mx + h * px, my + h * py), (mx - h * px, my - h * py))
    )


def pairwise_incidence(a, b) -> PairIncidence:
    """Exact incidence of two line-free objects.

    Tangency points are rational for rational input; crossing points are
    exact when they happen to be rational and floats otherwise.
    """
    _check_line_free(a)
    _check_line_free(b)
    if same_object(a, b):
        raise CoincidentObjects(f"{a} and {b} coincide")
    if isinstance(a, Point) and isinstance(b, Point):
        return PairIncidence(IncidenceKind.POINTS_DISTINCT)
    if isinstance(a, Circle) and isinstance(b, Point):
        a, b = b, a
    if isinstance(a, Point):
        d2 = _d2(a.center, b.center)
        r2 = b.radius * b.radius
        if sign(d2 - r2, d2 + r2) == 0:
            return PairIncidence(IncidenceKind.POINT_ON, (a.center,))
        return PairIncidence(IncidenceKind.POINT_OFF)
    return _circle_circle(a, b)


def _on_circle(p, c: Circle) -> bool:
    d2 = _d2(p, c.center)
    r2 = c.radius * c.radius
    return sign(d2 - r2, d2 + r2) == 0


def double_points(config) -> tuple[int, list]:
    """Points lying on all three objects (for a Point object: equal to it)."""
    objs = list(config)
    for o in objs:
        _check_line_free(o)
    pts = [o for o in objs if isinstance(o, Point)]
    circles = [o for o in objs if isinstance(o, Circle)]
    if len(pts) >= 2:
        return 0, []  # distinct points never share a location
    if len(pts) == 1:
        p = pts[0].center
        hit = all(_on_circle(p, c) for c in circles)
        return (1, [p]) if hit else (0, [])
    c1, c2, c3 = circles
    (x1, y1), (x2, y2), (x3, y3) = c1.center, c2.center, c3.center
    # radical lines: a*x + b*y = e
    a2, b2 = 2 * (x2 - x1), 2 * (y2 - y1)
    e2 = (x2**2 + y2**2 - c2.radius**2) - (x1**2 + y1**2 - c1.radius**2)
    a3, b3 = 2 * (x3 - x1), 2 * (y3 - y1)
    e3 = (x3**2 + y3**2 - c3.radius**2) - (x1**2 + y1**2 - c1.radius**2)
    det = a2 * b3 - a3 * b2
    scale = (abs(a2) + abs(b2)) * (abs(a3) + abs(b3)) + 1
    if sign(det, scale) != 0:
        rc = ((e2 * b3 - e3 * b2) / det, (a2 * e3 - a3 * e2) / det)
        return (1, [rc]) if _on_circle(rc, c1) else (0, [])
    # collinear centers: radical lines are parallel; common points exist only
    # when they coincide, and then they are exactly C1 ∩ C2
    if sign(a2 * a2 + b2 * b2, scale) == 0:
        return 0, []
    same_line = sign(a2 * e3 - a3 * e2, scale) == 0 and sign(b2 * e3 - b3 * e2, scale) == 0
    if not same_line:
        return 0, []
    pts = list(_circle_circle(c1, c2).points)
    return len(pts), pts


def _side(circle: Circle, obj) -> str:
    """Where ``obj`` sits relative to ``circle``: in/out (open components),
    in_closure/out_closure (touching), or none (crossing, or a point on it)."""
    if isinstance(obj, Point):
        d2 = _d2(obj.center, circle.center)
        r2 = circle.radius * circle.radius
        s = sign(d2 - r2, d2 + r2)
        return {-1: "in", 1: "out", 0: "none"}[s]
    inside = encloses(circle, obj)
    if inside is Enclosure.STRICTLY:
        return "in"
    if inside is Enclosure.YES:
        return "in_closure"
    around = encloses(obj, circle)
    if around is Enclosure.STRICTLY:
        return "out"
    if around is Enclosure.YES:
        return "out_closure"
    d2 = _d2(obj.center, circle.center)
    s2 = (obj.radius + circle.radius) ** 2
    s = sign(d2 - s2, d2 + s2)
    return {1: "out", 0: "out_closure", -1: "none"}[s]


def separator_status(config) -> Separator:
    """Strict(i) if the other two objects lie in distinct open components of
    the plane minus circle i; Large(i) if only their closures are separated.

    A Point lying on circle i is treated as separated from nothing.
    """
    found = separators(config)
    if not found:
        return NO_SEPARATOR
    found.sort(key=lambda s: (s.kind is not SeparatorKind.STRICT, s.index))
    return found[0]


def separators(config) -> list[Separator]:
    """Every separating circle of the configuration (at most one is expected)."""
    objs = list(config)
    out = []
    for i, c in enumerate(objs):
        if not isinstance(c, Circle):
            continue
        j, k = [n for n in range(3) if n != i]
        sj, sk = _side(c, objs[j]), _side(c, objs[k])
        if "none" in (sj, sk):
            continue
        inner = {"in", "in_closure"}
        if (sj in inner) != (sk in inner):
            kind = SeparatorKind.STRICT if {sj, sk} == {"in", "out"} else SeparatorKind.LARGE
            out.append(Separator(kind, i))
    return out


def _same_point(p, q) -> bool:
    if is_exact(*p, *q):
        return p == q
    scale = abs(float(p[0])) + abs(float(p[1])) + 1
    return abs(float(p[0]) - float(q[0])) <= 1e-9 * scale and abs(
        float(p[1]) - float(q[1])
    ) <= 1e-9 * scale


def topo_signature(config) -> TopoSignature:
    objs = list(config)
    if len(objs) != 3:
        raise ValueError("a configuration has exactly three objects")
    pairs = {(i, j): pairwise_incidence(objs[i], objs[j]) for i, j in ((0, 1), (0, 2), (1, 2))}
    k, dpts = double_points(objs)
    total = sum(p.size for p in pairs.values())
    distinct = total - 2 * k
    tangent_pts = []
    for inc in pairs.values():
        if inc.kind is IncidenceKind.TANGENT:
            pt = inc.points[0]
            if not any(_same_point(pt, q) for q in tangent_pts):
                tangent_pts.append(pt)
    circle_pairs = [
        inc
        for (i, j), inc in pairs.items()
        if isinstance(objs[i], Circle) and isinstance(objs[j], Circle)
    ]
    # each tangent pair meets only at its contact, so with one double point
    # all contacts coincide there
    triple = k == 1 and bool(circle_pairs) and all(
        inc.kind is IncidenceKind.TANGENT for inc in circle_pairs
    )
    return TopoSignature(
        object_kinds=tuple(sorted(o.kind for o in objs)),
        distinct_intersections=distinct,
        tangency_points=len(tangent_pts),
        double_points=k,
        separator=separator_status(objs),
        triple_tangent_at_common_point=triple,
    )


# (row, distinct intersections) -> count
THREE_CIRCLES = {
    ("strict_separator", 0): 0,
    ("no_tangency", 0): 8,
    ("no_tangency", 2): 4,
    ("no_tangency", 4): 4,
    ("no_tangency", 6): 8,
    ("one_or_two_tangencies", 1): 6,
    ("one_or_two_tangencies", 2): 5,
    ("one_or_two_tangencies", 3): 4,
    ("one_or_two_tangencies", 4): 5,
    ("one_or_two_tangencies", 5): 6,
    ("three_tangencies", 3): 5,
    ("tangent_and_separator", 1): 2,
    ("tangent_and_separator", 2): 3,
    ("double_points", 1): INFINITE,
    ("double_points", 2): 2,
    ("double_points", 3): 3,
    ("double_points", 4): 5,
}

POINT_TWO_CIRCLES = {
    ("strict_separator", 0): 0,
    ("no_tangency", 0): 4,
    ("no_tangency", 1): 2,
    ("no_tangency", 2): 2,
    ("no_tangency", 3): 2,
    ("tangent_pair", 1): 3,
    ("tangent_pair", 2): 2,
    ("tangent_and_separator", 1): 1,
    ("double_points", 1): INFINITE,
    ("double_points", 2): 1,
}

TWO_POINTS_CIRCLE = {
    ("strict_separator",): 0,
    ("incidence",): 1,
    ("generic",): 2,
}

THREE_POINTS = {("any",): 1}

TABLES = {
    "three_circles": THREE_CIRCLES,
    "point_two_circles": POINT_TWO_CIRCLES,
    "two_points_circle": TWO_POINTS_CIRCLE,
    "three_points": THREE_POINTS,
}


def table_cell(sig: TopoSignature) -> tuple[str, tuple]:
    """The (table name, cell key) a signature falls into; the key may be absent
    from the table, which means no configuration can produce it."""
    n = sig.distinct_intersections
    strict = sig.separator.kind is SeparatorKind.STRICT
    large = sig.separator.kind is SeparatorKind.LARGE
    if sig.n_points == 3:
        return "three_points", ("any",)
    if sig.n_points == 2:
        if strict:
            return "two_points_circle", ("strict_separator",)
        if n >= 1:
            return "two_points_circle", ("incidence",)
        return "two_points_circle", ("generic",)
    if sig.n_points == 1:
        if strict:
            row = "strict_separator"
        elif sig.double_points:
            row = "double_points"
        elif sig.tangency_points and large:
            row = "tangent_and_separator"
        elif sig.tangency_points:
            row = "tangent_pair"
        else:
            row = "no_tangency"
        return "point_two_circles", (row, n)
    if strict:
        row = "strict_separator"
    elif sig.double_points:
        row = "double_points"
    elif large:
        row = "tangent_and_separator"
    elif sig.tangency_points == 0:
        row = "no_tangency"
    elif sig.tangency_points == 3:
        row = "three_tangencies"
    else:
        row = "one_or_two_tangencies"
    return "three_circles", (row, n)


def expected_count(sig: TopoSignature) -> Count:
    table, key = table_cell(sig)
    return TABLES[table].get(key, IMPOSSIBLE)


def fixtures():
    """The catalog of concrete configurations, keyed by ``(table, cell)``."""
    from .fixtures import fixtures as _fixtures

    return _fixtures()
