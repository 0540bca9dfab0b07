"""Concrete exact-rational configurations for every filled cell of the case
tables, plus the worked orientation-class tables.

Every coordinate is rational, so all predicates on these configurations are
decided exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as F

from .objects import Circle, Line, Point


@dataclass(frozen=True)
class Fixture:
    name: str
    table: str
    cell: tuple
    objects: tuple
    expected: object  # int or classify.INFINITE
    note: str = ""
    # reference signs of the four class discriminants, in CLASS_FLIPS order
    class_signs: tuple | None = None
    # the reference row holds only up to a global change of sign
    up_to_sign: bool = False
    tags: tuple = field(default_factory=tuple)


def C(x, y, r) -> Circle:
    return Circle(F(x), F(y), F(r))


def P(x, y) -> Point:
    return Point(F(x), F(y))


def _catalog():
    from .classify import INFINITE

    three = "three_circles"
    pt2 = "point_two_circles"
    pts2 = "two_points_circle"
    pts3 = "three_points"
    return [
        # --- three circles ---------------------------------------------------
        Fixture("strict_separator", three, ("strict_separator", 0),
                (C(0, 0, 5), C(1, 0, 1), C(10, 0, 1)), 0,
                "one circle inside C1, one outside"),
        Fixture("nested_chain", three, ("strict_separator", 0),
                (C(0, 0, 1), C(0, 0, 2), C(0, 0, 3)), 0,
                "concentric: the middle circle separates strictly"),
        Fixture("disjoint_apart", three, ("no_tangency", 0),
                (C(0, 0, 1), C(4, 0, 1), C(2, 5, 1)), 8,
                "pairwise disjoint, none enclosing"),
        Fixture("disjoint_enclosed", three, ("no_tangency", 0),
                (C(0, 0, 10), C(-3, 0, 1), C(3, 0, 1)), 8,
                "one circle encloses the other two"),
        Fixture("one_crossing_pair", three, ("no_tangency", 2),
                (C(10, 0, 1), C(0, 0, 1), C(1, 0, 1)), 4,
                "C2 and C3 cross, C1 apart", class_signs=(1, -1, -1, 1), up_to_sign=True),
        Fixture("crossing_chain", three, ("no_tangency", 4),
                (C(0, 0, 1), C(F(3, 2), 0, 1), C(3, 0, 1)), 4,
                "C1 cuts C2, C2 cuts C3, C1 and C3 disjoint",
                class_signs=(1, 1, -1, -1), up_to_sign=True),
        Fixture("pairwise_crossing", three, ("no_tangency", 6),
                (C(0, 0, 1), C(1, 0, 1), C(F(1, 2), 1, 1)), 8,
                "all pairs cross at distinct points", class_signs=(1, 1, 1, 1)),
        Fixture("tangent_pair_apart", three, ("one_or_two_tangencies", 1),
                (C(10, 0, 1), C(0, 0, 1), C(2, 0, 1)), 6,
                "C2, C3 externally tangent, C1 apart", class_signs=(1, 0, 0, 1)),
        Fixture("tangent_chain", three, ("one_or_two_tangencies", 2),
                (C(0, 0, 1), C(2, 0, 1), C(4, 0, 1)), 5,
                "C1 tangent C2 tangent C3", class_signs=(1, 0, 0, 0)),
        Fixture("tangent_pair_one_cut", three, ("one_or_two_tangencies", 3),
                (C(0, 0, 2), C(2, 0, 1), C(0, 0, 1)), 4,
                "C2, C3 tangent; C1 cuts C2 and encloses C3", class_signs=(-1, 0, 0, 1)),
        Fixture("two_tangencies_one_cut", three, ("one_or_two_tangencies", 4),
                (C(1, 0, 1), C(0, 0, 2), C(0, 1, 1)), 5,
                "chain C1-C2-C3 whose ends cross"),
        Fixture("tangent_pair_both_cut", three, ("one_or_two_tangencies", 5),
                (C(1, F(1, 2), 1), C(0, 0, 1), C(2, 0, 1)), 6,
                "C2, C3 tangent; C1 cuts both away from the contact",
                class_signs=(1, 0, 0, 1)),
        Fixture("mutually_tangent", three, ("three_tangencies", 3),
                (C(0, 0, 1), C(3, 0, 2), C(0, 4, 3)), 5,
                "pairwise externally tangent at three distinct points",
                class_signs=(1, 0, 0, 0)),
        Fixture("tangent_separated", three, ("tangent_and_separator", 1),
                (C(0, 0, 1), C(3, 0, 1), C(0, 0, 2)), 2,
                "C3 encloses C1 and touches C2 from inside", class_signs=(-1, 0, 0, -1)),
        Fixture("tangent_chain_separated", three, ("tangent_and_separator", 2),
                (C(3, 0, 1), C(0, 0, 2), C(-1, 0, 1)), 3,
                "C2 separates: C1 outside touching, C3 inside touching",
                class_signs=(0, 0, -1, 0)),
        Fixture("triple_tangent_point", three, ("double_points", 1),
                (C(1, 0, 1), C(2, 0, 2), C(-1, 0, 1)), INFINITE,
                "all tangent at the origin"),
        Fixture("coaxal_two_points", three, ("double_points", 2),
                (C(0, 0, 1), C(F(3, 4), 0, F(5, 4)), C(F(-4, 3), 0, F(5, 3))), 2,
                "pencil through (0, 1) and (0, -1)"),
        Fixture("tangent_pair_cut_at_contact", three, ("double_points", 3),
                (C(0, 1, 1), C(1, 0, 1), C(-1, 0, 1)), 3,
                "C2, C3 tangent at the origin, C1 crosses both there"),
        Fixture("common_point", three, ("double_points", 4),
                (C(3, 4, 5), C(-3, 4, 5), C(0, -5, 5)), 5,
                "three circles through the origin, crossing"),
        # --- one point, two circles -----------------------------------------
        Fixture("p_strict_separator", pt2, ("strict_separator", 0),
                (P(0, 0), C(0, 0, 1), C(5, 0, 1)), 0, "point inside C2, C3 outside"),
        Fixture("p_apart", pt2, ("no_tangency", 0),
                (P(5, 5), C(0, 0, 1), C(3, 0, 1)), 4, "everything disjoint"),
        Fixture("p_on_one", pt2, ("no_tangency", 1),
                (P(1, 0), C(0, 0, 1), C(5, 0, 1)), 2, "point on C2, circles apart"),
        Fixture("p_on_one_enclosing", pt2, ("no_tangency", 1),
                (P(3, 0), C(0, 0, 3), C(0, 1, 1)), 2, "point on C2 which encloses C3"),
        Fixture("p_crossing_pair", pt2, ("no_tangency", 2),
                (P(5, 5), C(0, 0, 1), C(1, 0, 1)), 2, "circles cross, point apart"),
        Fixture("p_on_crossing_pair", pt2, ("no_tangency", 3),
                (P(-1, 0), C(0, 0, 1), C(1, 0, 1)), 2, "point on C2, circles cross"),
        Fixture("p_tangent_pair", pt2, ("tangent_pair", 1),
                (P(5, 5), C(0, 0, 1), C(2, 0, 1)), 3, "tangent circles, point apart"),
        Fixture("p_on_tangent_pair", pt2, ("tangent_pair", 2),
                (P(-1, 0), C(0, 0, 1), C(2, 0, 1)), 2, "point on C2, circles tangent"),
        Fixture("p_tangent_separated", pt2, ("tangent_and_separator", 1),
                (P(0, 0), C(0, 0, 2), C(3, 0, 1)), 1,
                "point inside C2, C3 touches C2 from outside"),
        Fixture("p_at_contact", pt2, ("double_points", 1),
                (P(0, 0), C(1, 0, 1), C(-1, 0, 1)), INFINITE, "point at the contact"),
        Fixture("p_at_crossing", pt2, ("double_points", 2),
                (P(3, 4), C(0, 0, 5), C(6, 0, 5)), 1, "point at a crossing"),
        # --- two points, one circle -----------------------------------------
        Fixture("pp_separated", pts2, ("strict_separator",),
                (P(0, 0), P(5, 0), C(0, 0, 1)), 0, "circle separates the points"),
        Fixture("pp_one_on", pts2, ("incidence",),
                (P(1, 0), P(5, 5), C(0, 0, 1)), 1, "one point on the circle"),
        Fixture("pp_both_on", pts2, ("incidence",),
                (P(1, 0), P(0, 1), C(0, 0, 1)), 1, "both points on the circle"),
        Fixture("pp_outside", pts2, ("generic",),
                (P(5, 5), P(-5, 5), C(0, 0, 1)), 2, "both points outside"),
        Fixture("pp_inside", pts2, ("generic",),
                (P(0, 0), P(F(1, 2), 0), C(0, 0, 1)), 2, "both points inside"),
        # --- three points ---------------------------------------------------
        Fixture("ppp_triangle", pts3, ("any",),
                (P(0, 0), P(4, 0), P(0, 4)), 1, "circumcircle"),
        Fixture("ppp_collinear", pts3, ("any",),
                (P(0, 0), P(1, 0), P(2, 0)), 1, "the line through them"),
    ]


def fixtures() -> dict[tuple, list[Fixture]]:
    """Map ``(table, cell)`` to the fixtures landing in that cell."""
    out: dict[tuple, list[Fixture]] = {}
    for fx in _catalog():
        out.setdefault((fx.table, fx.cell), []).append(fx)
    return out


def all_fixtures() -> list[Fixture]:
    return _catalog()


def by_name(name: str) -> Fixture:
    for fx in _catalog():
        if fx.name == name:
            return fx
    raise KeyError(name)


def line_configurations():
    """Configurations containing lines (original frame) with their counts,
    including the point at infinity when all objects pass through it."""
    from .classify import INFINITE

    return [
        ("triangle_of_lines", (Line(F(0), F(1), F(0)), Line(F(1), F(0), F(0)),
                               Line(F(3, 5), F(4, 5), F(12, 5))), 5),
        ("line_circle_point", (Line(F(0), F(1), F(0)), C(0, 2, 1), P(0, 5)), None),
        ("parallel_lines_circle", (Line(F(0), F(1), F(1)), Line(F(0), F(1), F(-1)),
                                   C(5, 0, 1)), None),
        ("concurrent_lines", (Line(F(0), F(1), F(0)), Line(F(1), F(0), F(0)),
                              Line(F(3, 5), F(4, 5), F(0))), 2),
        ("parallel_three", (Line(F(0), F(1), F(0)), Line(F(0), F(1), F(1)),
                            Line(F(0), F(1), F(3))), INFINITE),
        ("two_circles_line", (C(0, 2, 1), C(4, 3, 2), Line(F(0), F(1), F(0))), None),
    ]
