from fractions import Fraction

import pytest

from kirwanlab.hamspace import make_spec


@pytest.fixture
def cp13():
    """CP^1 x CP^1 x CP^1 with weights 1, 2, 4 on the moving coordinates."""
    return make_spec([(1, [0, 1]), (1, [0, 2]), (1, [0, 4])])


@pytest.fixture
def cp2_013():
    return make_spec([(2, [0, 1, 3])])


def frac(s):
    return Fraction(s)
