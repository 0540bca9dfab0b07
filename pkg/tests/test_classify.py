import math
import random
from fractions import Fraction as F

import pytest

from apollonius.classify import (
    IMPOSSIBLE,
    INFINITE,
    TABLES,
    IncidenceKind,
    Separator,
    SeparatorKind,
    double_points,
    expected_count,
    fixtures,
    pairwise_incidence,
    separator_status,
    separators,
    table_cell,
    topo_signature,
)
from apollonius.errors import CoincidentObjects
from apollonius.objects import Circle, Point
from apollonius.randomgen import random_configs


def C(x, y, r):
    return Circle(F(x), F(y), F(r))


def test_pairwise_incidence():
    cross = pairwise_incidence(C(0, 0, 1), C(1, 0, 1))
    assert cross.kind is IncidenceKind.CROSSING
    pts = sorted(cross.points, key=lambda p: -float(p[1]))
    assert pts[0][0] == F(1, 2) and math.isclose(float(pts[0][1]), math.sqrt(3) / 2)
    assert math.isclose(float(pts[1][1]), -math.sqrt(3) / 2)
    assert pairwise_incidence(C(0, 0, 1), C(2, 0, 1)).points == ((F(1), F(0)),)
    on = pairwise_incidence(Point(F(1), F(0)), C(0, 0, 1))
    assert on.kind is IncidenceKind.POINT_ON and on.points == ((F(1), F(0)),)
    assert pairwise_incidence(C(0, 0, 5), C(1, 0, 1)).kind is IncidenceKind.DISJOINT
    assert pairwise_incidence(Point(F(0), F(0)), Point(F(1), F(0))).kind is IncidenceKind.POINTS_DISTINCT
    with pytest.raises(CoincidentObjects):
        pairwise_incidence(C(1, 1, 2), C(1, 1, 2))


def test_double_points():
    # rational pencil through (0, 1) and (0, -1): centers (c, 0), r^2 = c^2 + 1
    k, pts = double_points([C(0, 0, 1), C(F(3, 4), 0, F(5, 4)), C(F(-4, 3), 0, F(5, 3))])
    assert k == 2 and sorted(pts) == [(0, -1), (0, 1)]
    # three mutually tangent circles with distinct contacts
    assert double_points([C(0, 0, 1), C(3, 0, 2), C(0, 4, 3)])[0] == 0
    k, pts = double_points([Point(F(1), F(0)), C(0, 0, 1), C(2, 0, 1)])
    assert k == 1 and pts == [(1, 0)]


def test_separator_status():
    assert separator_status([C(0, 0, 5), C(1, 0, 1), C(10, 0, 1)]) == Separator(SeparatorKind.STRICT, 0)
    assert separator_status([C(0, 0, 2), C(1, 0, 1), C(3, 0, 1)]) == Separator(SeparatorKind.LARGE, 0)
    assert separator_status([C(0, 0, 2), C(1, 0, 2), C(0, 1, 2)]).kind is SeparatorKind.NONE
    # the separator is found wherever it sits in the list
    assert separator_status([C(1, 0, 1), C(10, 0, 1), C(0, 0, 5)]) == Separator(SeparatorKind.STRICT, 2)


def test_signatures():
    sig = topo_signature([C(0, 0, 2), C(1, 0, 2), C(0, 1, 2)])
    assert (sig.distinct_intersections, sig.tangency_points, sig.double_points) == (6, 0, 0)
    assert sig.separator.kind is SeparatorKind.NONE and not sig.triple_tangent_at_common_point
    chain = topo_signature([C(0, 0, 1), C(2, 0, 1), C(4, 0, 1)])
    assert (chain.distinct_intersections, chain.tangency_points, chain.double_points) == (2, 2, 0)
    assert chain.separator.kind is SeparatorKind.NONE
    # three circles tangent at the origin: (x - t)^2 + y^2 = t^2 for t = 1, 2, -3
    triple = topo_signature([C(1, 0, 1), C(2, 0, 2), C(-3, 0, 3)])
    assert triple.triple_tangent_at_common_point
    assert (triple.distinct_intersections, triple.double_points) == (1, 1)
    assert expected_count(triple) is INFINITE


def test_expected_count_examples():
    assert expected_count(topo_signature([C(0, 0, 2), C(1, 0, 2), C(0, 1, 2)])) == 8
    # tangent pair separated by an enclosing circle tangent to one of them
    sig = topo_signature([C(0, 0, 4), C(3, 0, 1), C(10, 0, 1)])
    assert table_cell(sig) == ("three_circles", ("tangent_and_separator", 1))
    assert expected_count(sig) == 2
    pts = [Point(F(0), F(0)), Point(F(1), F(0)), Point(F(0), F(1))]
    assert expected_count(topo_signature(pts)) == 1


def test_point_tables():
    assert expected_count(topo_signature([Point(F(0), F(0)), Point(F(9), F(0)), C(0, 0, 3)])) == 0
    assert expected_count(topo_signature([Point(F(3), F(0)), Point(F(9), F(0)), C(0, 0, 3)])) == 1
    assert expected_count(topo_signature([Point(F(5), F(0)), Point(F(9), F(0)), C(0, 0, 3)])) == 2


def test_table_values():
    three = set(TABLES["three_circles"].values())
    assert three == {0, 2, 3, 4, 5, 6, 8, INFINITE}
    assert len(TABLES["three_circles"]) == 17


def test_catalog_covers_every_cell():
    cat = fixtures()
    for table, cells in TABLES.items():
        for cell in cells:
            assert (table, cell) in cat, (table, cell)
    for (table, cell), items in cat.items():
        for fx in items:
            sig = topo_signature(fx.objects)
            assert table_cell(sig) == (table, cell), fx.name
            assert expected_count(sig) == fx.expected


@pytest.mark.parametrize("n_points", [0, 1, 2])
def test_random_configs_never_impossible(n_points):
    for objs in random_configs(7 + n_points, 1500, n_points=n_points):
        sig = topo_signature(objs)
        assert expected_count(sig) is not IMPOSSIBLE
        assert len(separators(objs)) <= 1
        if n_points == 0:
            assert sig.distinct_intersections <= 6


def test_degenerate_random_configs_never_impossible():
    rng = random.Random(5)
    from apollonius.randomgen import random_config

    for _ in range(1500):
        objs = random_config(rng, n_points=rng.choice((0, 0, 1, 2)), small_integers=True)
        sig = topo_signature(objs)
        assert expected_count(sig) is not IMPOSSIBLE, objs
        assert len(separators(objs)) <= 1
        if sig.triple_tangent_at_common_point:
            assert sig.double_points == 1 and sig.distinct_intersections == 1


def _similar(objs, a, b, tx, ty):
    """Apply z -> (a + bi) z + t, with a^2 + b^2 a rational square."""
    s = (a * a + b * b) ** F(1, 2)
    out = []
    for o in objs:
        x, y = o.center
        nx, ny = a * x - b * y + tx, b * x + a * y + ty
        out.append(Point(nx, ny) if isinstance(o, Point) else Circle(nx, ny, o.radius * F(s)))
    return out


def test_signature_similarity_invariance():
    rng = random.Random(11)
    for items in fixtures().values():
        for fx in items:
            base = topo_signature(fx.objects)
            for _ in range(5):
                a, b = rng.choice([(3, 4), (5, 12), (-4, 3), (1, 0), (0, 2)])
                t = F(rng.randint(-9, 9), rng.randint(1, 5)), F(rng.randint(-9, 9), rng.randint(1, 5))
                moved = topo_signature(_similar(fx.objects, F(a), F(b), *t))
                assert moved.distinct_intersections == base.distinct_intersections
                assert moved.tangency_points == base.tangency_points
                assert moved.double_points == base.double_points
                assert moved.separator.kind is base.separator.kind
