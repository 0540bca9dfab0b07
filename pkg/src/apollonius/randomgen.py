"""Seeded random configurations with bounded-denominator rational coordinates."""

from __future__ import annotations

import random
from fractions import Fraction

from .classify import IncidenceKind, double_points, pairwise_incidence
from .errors import CoincidentObjects
from .objects import Circle, Point

MAX_DEN = 8


def _rational(rng: random.Random, lo: int, hi: int, max_den: int = MAX_DEN) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_circle(rng: random.Random, extent: int = 5, max_radius: int = 5) -> Circle:
    r = Fraction(0)
    while r <= 0:
        r = _rational(rng, 0, max_radius)
    return Circle(_rational(rng, -extent, extent), _rational(rng, -extent, extent), r)


def random_point(rng: random.Random, extent: int = 5) -> Point:
    return Point(_rational(rng, -extent, extent), _rational(rng, -extent, extent))


def is_degenerate(config) -> bool:
    """Any exact tie: coincidence, tangency, incidence or a double point."""
    objs = list(config)
    try:
        for i in range(3):
            for j in range(i + 1, 3):
                kind = pairwise_incidence(objs[i], objs[j]).kind
                if kind in (IncidenceKind.TANGENT, IncidenceKind.POINT_ON):
                    return True
    except CoincidentObjects:
        return True
    return double_points(objs)[0] > 0


def random_config(
    rng: random.Random,
    n_points: int = 0,
    allow_degenerate: bool = False,
    small_integers: bool = False,
):
    """Three objects, ``n_points`` of which are points.

    ``small_integers`` draws from a coarse integer grid, which makes
    tangencies and double points common; it implies ``allow_degenerate``.
    """
    while True:
        if small_integers:
            objs = [Point(Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3)))
                    for _ in range(n_points)]
            objs += [Circle(Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3)),
                            Fraction(rng.randint(1, 4))) for _ in range(3 - n_points)]
        else:
            objs = [random_point(rng) for _ in range(n_points)]
            objs += [random_circle(rng) for _ in range(3 - n_points)]
        rng.shuffle(objs)
        try:
            degenerate = is_degenerate(objs)
        except CoincidentObjects:
            continue
        if small_integers or allow_degenerate:
            if _has_coincidence(objs):
                continue
            return objs
        if not degenerate:
            return objs


def _has_coincidence(objs) -> bool:
    try:
        for i in range(3):
            for j in range(i + 1, 3):
                pairwise_incidence(objs[i], objs[j])
    except CoincidentObjects:
        return True
    return False


def random_configs(seed: int, n: int, **kw):
    rng = random.Random(seed)
    return [random_config(rng, **kw) for _ in range(n)]
