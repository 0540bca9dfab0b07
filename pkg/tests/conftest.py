import random
from fractions import Fraction

import pytest


def rational(rng: random.Random, lo: int = -6, hi: int = 6, den: int = 8) -> Fraction:
    q = rng.randint(1, den)
    return Fraction(rng.randint(lo * q, hi * q), q)


@pytest.fixture
def rng():
    return random.Random(20240611)
