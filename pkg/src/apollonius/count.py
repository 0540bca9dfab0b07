"""Solution counting through discriminants of oriented triples.

Every object gets the positive orientation; the four orientation classes keep
the first object fixed and reverse the second and/or third. Each class has
2, 1 or 0 oriented solutions as its discriminant is >0, =0 or <0, and the
unoriented count is the union over classes, corrected for point objects
(whose reversal is the identity) and for double points (which belong to
every class).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._numeric import Scalar, sign
from .classify import INFINITE, Count, double_points
from .core import OrientedCircle, check_not_coincident, lorentz_q, power, power_sign, reverse
from .errors import InternalInconsistency, TripleTangentAtPoint

# (reverse second, reverse third), in the order the four classes are tabulated:
# (c1, c2, c3), (c1, ~c2, c3), (c1, c2, ~c3), (c1, ~c2, ~c3)
CLASS_FLIPS = ((False, False), (True, False), (False, True), (True, True))


@dataclass(frozen=True)
class ClassCount:
    flips: tuple[bool, bool]
    sign: int
    n: Count


@dataclass(frozen=True)
class CountResult:
    total: Count
    per_class: tuple[ClassCount, ...]
    z: int
    k: int

    @property
    def sum_n(self) -> Count:
        if any(c.n is INFINITE for c in self.per_class):
            return INFINITE
        return sum(c.n for c in self.per_class)


def _pair_signs(c1, c2, c3) -> tuple[int, int, int]:
    return power_sign(c1, c2), power_sign(c1, c3), power_sign(c2, c3)


def discriminant(c1: OrientedCircle, c2: OrientedCircle, c3: OrientedCircle) -> Scalar:
    """Product of the three pairwise powers."""
    if _pair_signs(c1, c2, c3) == (0, 0, 0):
        raise TripleTangentAtPoint("the three oriented circles are tangent at one point")
    return power(c1, c2) * power(c1, c3) * power(c2, c3)


def discriminant_sign(c1, c2, c3) -> int:
    s12, s13, s23 = _pair_signs(c1, c2, c3)
    if (s12, s13, s23) == (0, 0, 0):
        raise TripleTangentAtPoint("the three oriented circles are tangent at one point")
    return s12 * s13 * s23


def oriented_solution_count(c1, c2, c3) -> Count:
    """2, 1, 0 for a positive, zero, negative discriminant; INFINITE for a
    triple tangency at one point."""
    check_not_coincident(c1, c2)
    check_not_coincident(c1, c3)
    check_not_coincident(c2, c3)
    if _pair_signs(c1, c2, c3) == (0, 0, 0):
        return INFINITE
    return discriminant_sign(c1, c2, c3) + 1


def oriented_triple(config) -> tuple[OrientedCircle, OrientedCircle, OrientedCircle]:
    return tuple(OrientedCircle.from_object(o) for o in config)


def per_class_counts(config) -> tuple[ClassCount, ...]:
    c1, c2, c3 = oriented_triple(config)
    out = []
    for f2, f3 in CLASS_FLIPS:
        a2 = reverse(c2) if f2 else c2
        a3 = reverse(c3) if f3 else c3
        n = oriented_solution_count(c1, a2, a3)
        s = 0 if n is INFINITE else n - 1
        out.append(ClassCount((f2, f3), s, n))
    return tuple(out)


def apollonius_count(config) -> CountResult:
    """Number of circles (lines and degenerate point solutions included) tangent
    to all three objects of a line-free configuration."""
    config = list(config)
    classes = per_class_counts(config)
    z = sum(1 for c in oriented_triple(config) if sign(c.r) == 0)
    k, _ = double_points(config)
    if any(c.n is INFINITE for c in classes):
        return CountResult(INFINITE, classes, z, k)
    sum_n = sum(c.n for c in classes)
    total = Fraction(sum_n, 2**z) - k * (Fraction(4, 2**z) - 1)
    if total.denominator != 1 or total < 0:
        raise InternalInconsistency(
            f"non-integral count {total} (sum N = {sum_n}, z = {z}, k = {k})"
        )
    return CountResult(int(total), classes, z, k)


__all__ = [
    "CLASS_FLIPS",
    "ClassCount",
    "CountResult",
    "apollonius_count",
    "discriminant",
    "discriminant_sign",
    "lorentz_q",
    "oriented_solution_count",
    "per_class_counts",
]
