import random
from fractions import Fraction

import pytest

from recipsums import ResidueSet, make_field


def random_subset(p: int, rng: random.Random, min_size: int = 1) -> ResidueSet:
    size = rng.randint(min_size, p - 1)
    return ResidueSet.from_members(make_field(p), rng.sample(range(p), size))


def epsilon_for_height(p: int, h: int) -> Fraction:
    """An exact rational epsilon in (0, 1] with floor(p^epsilon) == h."""
    assert 1 <= h <= p
    for den in range(1, 129):
        # smallest num >= 1 with p^num >= h^den
        num = 1
        while p**num < h**den:
            num += 1
        if h**den <= p**num < (h + 1) ** den and num <= den:
            return Fraction(num, den)
    raise AssertionError(f"no small rational exponent for p={p}, H={h}")


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260809)
