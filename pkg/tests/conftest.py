import random

import pytest

from nlvcodec import ValueArray

FIGURE_VALUES = [3, 8, 5, 6, 3, 2, 7, 10, 9]


@pytest.fixture
def figure_array():
    """The running example array from the heap drawings."""
    return ValueArray(FIGURE_VALUES)


def random_no_equal_neighbours(rng, n, lo=1, hi=50):
    """Random array with no two consecutive equal values."""
    values = [rng.randint(lo, hi)]
    while len(values) < n:
        v = rng.randint(lo, hi)
        if v != values[-1]:
            values.append(v)
    return ValueArray(values)


def make_rng(seed):
    return random.Random(seed)
