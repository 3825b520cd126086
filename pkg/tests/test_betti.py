"""Tests for multigraded Betti numbers and regularity."""

from itertools import combinations

import pytest

from src.config.settings import settings
from src.models.errors import DomainError, ResourceLimitError
from src.models.field import GF2, RATIONALS
from src.models.monomial import mask_to_monomial
from src.services.betti import MINUS_INFINITY, Regularity, betti_table, lcm_lattice, regularity
from src.services.ideals import minimize, power, unit_ideal, zero_ideal
from tests.conftest import ideal
from tests.test_homology import RP2


def taylor_alternating_sum(I, a):
    """Σ (-1)^(|σ|-1) over generator subsets σ with lcm(σ) = a."""
    return sum(1 if m.bit_count() % 2 else -1 for m in lcm_lattice(I)[a])


class TestAnchors:
    def test_maximal_ideal(self, maximal_xy, coefficients):
        assert regularity(maximal_xy, coefficients) == Regularity(1)

    def test_koszul_squares(self, koszul_squares, coefficients):
        table = betti_table(koszul_squares, coefficients)
        assert table.entries == {(0, (0, 2)): 1, (0, (2, 0)): 1, (1, (2, 2)): 1}
        assert int(table.regularity()) == 3

    def test_maximal_ideal_squared(self, maximal_xy_squared):
        table = betti_table(maximal_xy_squared)
        assert table.coarse() == {(0, 2): 3, (1, 3): 2}
        assert table.projective_dimension() == 1
        assert int(table.regularity()) == 2

    def test_triangle(self, triangle):
        table = betti_table(triangle)
        assert table.entries[1, (1, 1, 1)] == 2
        assert int(regularity(triangle)) == 2

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_powers_of_maximal_ideal(self, d):
        for n in (2, 3):
            m = ideal(*[tuple(int(i == j) for j in range(n)) for i in range(n)])
            assert int(regularity(power(m, d))) == d

    def test_uneven_generators(self):
        assert int(regularity(ideal((4, 0), (2, 2), (0, 4)))) == 5


class TestConventions:
    def test_zero_ideal(self):
        assert regularity(zero_ideal(2)) is MINUS_INFINITY
        with pytest.raises(DomainError):
            betti_table(zero_ideal(2))

    def test_unit_ideal(self):
        table = betti_table(unit_ideal(2))
        assert table.entries == {(0, (0, 0)): 1}
        assert int(table.regularity()) == 0

    def test_minus_infinity(self):
        assert MINUS_INFINITY < Regularity(0)
        assert MINUS_INFINITY.to_json() == "-inf"
        with pytest.raises(DomainError):
            int(MINUS_INFINITY)

    def test_generator_cap(self, maximal_xy_squared):
        with pytest.raises(ResourceLimitError) as info:
            betti_table(maximal_xy_squared, mu_cap=2)
        assert info.value.cap == 2
        assert info.value.observed == 3

    def test_lcm_class_cap(self, monkeypatch):
        # lcm(x^3, y^3) = lcm(x^3, xy, y^3) puts two subsets in one class
        I = ideal((3, 0), (1, 1), (0, 3))
        betti_table.cache_clear()
        monkeypatch.setattr(settings, "betti_class_cap", 1)
        with pytest.raises(ResourceLimitError) as info:
            betti_table(I)
        assert info.value.observed == 2
        assert "lcm class" in str(info.value)


class TestEulerCharacteristic:
    @pytest.mark.parametrize(
        "gens",
        [
            [(2, 0), (1, 1), (0, 2)],
            [(1, 1, 0), (0, 1, 1), (1, 0, 1)],
            [(2, 1, 0), (0, 2, 1), (1, 0, 2), (1, 1, 1)],
            [(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)],
        ],
    )
    def test_alternating_sum_matches_taylor(self, gens, coefficients):
        I = ideal(*gens)
        table = betti_table(I, coefficients)
        for a in lcm_lattice(I):
            alternating = sum(
                b if i % 2 == 0 else -b for (i, c), b in table.entries.items() if c == a
            )
            assert alternating == taylor_alternating_sum(I, a)


@pytest.mark.slow
def test_field_sensitive_regularity():
    """The Stanley-Reisner ideal of the projective plane depends on the characteristic."""
    nonfaces = [
        sum(1 << v for v in c)
        for c in combinations(range(6), 3)
        if sum(1 << v for v in c) not in RP2
    ]
    I = minimize((mask_to_monomial(f, 6) for f in nonfaces), 6)
    assert len(I.gens) == 10
    assert int(regularity(I, RATIONALS)) == 3
    assert int(regularity(I, GF2)) == 4
