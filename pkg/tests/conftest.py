"""Shared fixtures: small named ideals and coefficient fields."""

import pytest

from src.models.complex import SimplicialComplex
from src.models.field import GF2, RATIONALS
from src.models.monomial import MonomialIdeal
from src.services.ideals import minimize


def ideal(*gens: tuple[int, ...]) -> MonomialIdeal:
    """Ideal from exponent tuples; the variable count is read off the first one."""
    return minimize(gens, len(gens[0]))


def reduced_euler(D: SimplicialComplex) -> int:
    """Σ (-1)^d f_d, the empty face included at d = -1."""
    return sum(count if d % 2 == 0 else -count for d, count in D.f_vector().items())


@pytest.fixture
def maximal_xy() -> MonomialIdeal:
    return ideal((1, 0), (0, 1))


@pytest.fixture
def koszul_squares() -> MonomialIdeal:
    """(x^2, y^2)"""
    return ideal((2, 0), (0, 2))


@pytest.fixture
def maximal_xy_squared() -> MonomialIdeal:
    """(x^2, xy, y^2)"""
    return ideal((2, 0), (1, 1), (0, 2))


@pytest.fixture
def triangle() -> MonomialIdeal:
    """Edge ideal of the triangle, (xy, yz, xz)."""
    return ideal((1, 1, 0), (0, 1, 1), (1, 0, 1))


@pytest.fixture(params=[RATIONALS, GF2], ids=["QQ", "GF2"])
def coefficients(request):
    return request.param
