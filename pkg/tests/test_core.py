import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from apollonius.core import (
    Enclosure,
    OrientedCircle as OC,
    PairRelation,
    encloses,
    is_tangent_oriented,
    lorentz_q,
    pair_relation,
    power,
    radius_shift,
    reverse,
    tangent_count_oriented,
)
from apollonius.errors import CoincidentCircles
from apollonius.oracle import oriented_common_tangents

from conftest import rational

fracs = st.fractions(min_value=-50, max_value=50, max_denominator=30)
circles = st.builds(OC, fracs, fracs, fracs)


@pytest.mark.parametrize("c, q", [((0, 0, 0), 0), ((3, 4, 5), 0), ((1, 0, 2), -3)])
def test_lorentz_q(c, q):
    assert lorentz_q(OC(*c)) == q


@pytest.mark.parametrize(
    "a, b, p",
    [((0, 0, 1), (3, 0, 1), 9), ((0, 0, 1), (2, 0, -1), 0), ((0, 0, 3), (1, 0, 1), -3)],
)
def test_power(a, b, p):
    assert power(OC(*a), OC(*b)) == p


def test_reverse():
    assert reverse(OC(0, 0, 2)) == OC(0, 0, -2)
    assert reverse(OC(1, 1, 0)) == OC(1, 1, 0)
    c = OC(5, -3, 7)
    assert reverse(reverse(c)) == c


def test_radius_shift():
    assert radius_shift(OC(0, 0, 2), 2) == OC(0, 0, 0)
    assert radius_shift(OC(1, 2, -1), -1) == OC(1, 2, 0)
    a, b = OC(0, 0, 1), OC(3, 0, 1)
    assert power(radius_shift(a, 1), radius_shift(b, 1)) == power(a, b) == 9


@pytest.mark.parametrize(
    "a, b, tag",
    [
        ((0, 0, 1), (4, 0, 1), PairRelation.DISJOINT_OUTSIDE),
        ((0, 0, 1), (1, 0, 1), PairRelation.CROSS_SAME_SENSE),
        ((0, 0, 1), (1, 0, -1), PairRelation.CROSS_OPPOSITE_SENSE),
        ((0, 0, 3), (1, 0, 1), PairRelation.ONE_ENCLOSES_OTHER),
        ((0, 0, 1), (2, 0, 1), PairRelation.TANGENT_EXTERNAL),
        ((0, 0, 2), (1, 0, 1), PairRelation.TANGENT_INTERNAL),
    ],
)
def test_pair_relation(a, b, tag):
    assert pair_relation(OC(*a), OC(*b)) is tag


def test_pair_relation_rejects_coincident_and_points():
    with pytest.raises(CoincidentCircles):
        pair_relation(OC(0, 0, 1), OC(0, 0, -1))
    with pytest.raises(ValueError):
        pair_relation(OC(0, 0, 0), OC(3, 0, 1))


def test_is_tangent_oriented():
    assert is_tangent_oriented(OC(0, 0, 1), OC(2, 0, -1))
    assert is_tangent_oriented(OC(1, 0, 0), OC(0, 0, 1))
    assert not is_tangent_oriented(OC(0, 0, 1), OC(4, 0, 1))


def test_tangent_count_oriented():
    assert tangent_count_oriented(OC(0, 0, 1), OC(4, 0, 1)) == 2
    assert tangent_count_oriented(OC(0, 0, 1), OC(2, 0, -1)) == 1
    assert tangent_count_oriented(OC(0, 0, 1), OC(1, 0, -1)) == 0
    assert oriented_common_tangents(OC(0, 0, 1), OC(1, 0, -1)) == []
    with pytest.raises(CoincidentCircles):
        tangent_count_oriented(OC(0, 0, 1), OC(0, 0, 1))


def test_encloses():
    assert encloses(OC(0, 0, 3), OC(1, 0, 1)) is Enclosure.STRICTLY
    assert encloses(OC(0, 0, 2), OC(1, 0, 1)) is Enclosure.YES
    assert encloses(OC(0, 0, 1), OC(4, 0, 1)) is Enclosure.NO


def test_float_mode_tolerance():
    # 1e-12 off tangency counts as tangent in floats, not in rationals
    assert is_tangent_oriented(OC(0.0, 0.0, 1.0), OC(2.0 + 1e-12, 0.0, -1.0))
    assert not is_tangent_oriented(OC(0, 0, 1), OC(2 + F(1, 10**12), 0, -1))


@given(circles, circles)
def test_power_symmetric_and_even(a, b):
    assert power(a, b) == power(b, a)
    assert power(reverse(a), reverse(b)) == power(a, b)


@given(circles, circles, fracs, fracs, fracs)
def test_power_shift_and_translation(a, b, t, dx, dy):
    assert power(radius_shift(a, t), radius_shift(b, t)) == power(a, b)
    move = lambda c: OC(c.cx + dx, c.cy + dy, c.r)  # noqa: E731
    assert power(move(a), move(b)) == power(a, b)


def _euclid_tangent(a: OC, b: OC) -> bool:
    # unoriented contact, then the senses: opposite for external contact,
    # equal for internal contact; a point circle has no sense
    d2 = (a.cx - b.cx) ** 2 + (a.cy - b.cy) ** 2
    ra, rb = abs(a.r), abs(b.r)
    if d2 == 0:
        return ra == rb == 0 or a.r == b.r
    if a.r == 0 or b.r == 0:
        return d2 == (ra + rb) ** 2
    same = (a.r > 0) == (b.r > 0)
    if d2 == (ra + rb) ** 2:
        return not same
    if d2 == (ra - rb) ** 2:
        return same
    return False


def test_tangency_against_euclid(rng):
    hits = 0
    for _ in range(1000):
        a = OC(rational(rng, -3, 3, 2), rational(rng, -3, 3, 2), rational(rng, -3, 3, 2))
        b = OC(rational(rng, -3, 3, 2), rational(rng, -3, 3, 2), rational(rng, -3, 3, 2))
        hits += _euclid_tangent(a, b)
        assert is_tangent_oriented(a, b) == _euclid_tangent(a, b)
    assert hits > 0


def test_tangent_lines_against_oracle(rng):
    seen = set()
    for _ in range(1000):
        while True:
            a = OC(rational(rng, -4, 4, 2), rational(rng, -4, 4, 2), rational(rng, -4, 4, 2))
            b = OC(rational(rng, -4, 4, 2), rational(rng, -4, 4, 2), rational(rng, -4, 4, 2))
            if a.r != 0 and b.r != 0 and (a.cx, a.cy, abs(a.r)) != (b.cx, b.cy, abs(b.r)):
                break
        n = tangent_count_oriented(a, b)
        seen.add(n)
        lines = oriented_common_tangents(a, b)
        assert len(lines) == n
        for line in lines:
            for c in (a, b):
                assert math.isclose(float(line.nx * c.cx + line.ny * c.cy - line.d), -float(c.r), abs_tol=1e-9)
    assert seen == {0, 1, 2}
