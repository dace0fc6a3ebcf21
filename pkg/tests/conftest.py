from fractions import Fraction

import pytest

from spectralpairs import (
    BoxDomain,
    ContinuousPair,
    FiniteSet,
    combine_orthogonal,
    integer_lattice,
)


@pytest.fixture
def unit_base():
    """[0,1) with the integer lattice: the basic orthogonal pair, constants 1."""
    return ContinuousPair.orthogonal(BoxDomain.interval(0, 1), integer_lattice(1))


@pytest.fixture
def two_interval_sets():
    """A = {0, 2}, J = {0, 1} in Z_4: the unitary 2x2 example."""
    return FiniteSet.from_ints(4, [0, 2]), FiniteSet.from_ints(4, [0, 1])


@pytest.fixture
def two_interval_pair(unit_base, two_interval_sets):
    """[0,1) u [2,3) with spectrum Z u Z+1/4."""
    a, j = two_interval_sets
    result = combine_orthogonal(unit_base, a, j)
    assert result.ok
    return result.pair


@pytest.fixture
def golden_sets():
    """A = {0, 2}, J = {0, 1} in Z_5: invertible but not unitary."""
    return FiniteSet.from_ints(5, [0, 2]), FiniteSet.from_ints(5, [0, 1])


def rational(s) -> Fraction:
    return Fraction(s)
