"""Tests for single-ideal queries."""

import pytest

from src.models.errors import DomainError
from src.models.field import GF2
from src.services.compute import QUANTITIES, compute
from src.services.ideals import zero_ideal
from tests.conftest import ideal


def test_every_quantity_answers(koszul_squares):
    for quantity in QUANTITIES:
        result = compute(koszul_squares, quantity, m=2, s=2)
        assert result["quantity"] == quantity
        assert "value" in result


def test_radical_and_closure(koszul_squares):
    assert compute(koszul_squares, "radical")["value"]["generators"] == [[0, 1], [1, 0]]
    closure = compute(koszul_squares, "closure", s=2)["value"]
    assert closure["generators"] == [[0, 4], [1, 3], [2, 2], [3, 1], [4, 0]]


def test_symbolic_power_text(triangle):
    value = compute(triangle, "sympow", m=2)["value"]
    assert value["text"] == "(x2^2*x3^2, x1*x2*x3, x1^2*x3^2, x1^2*x2^2)"


def test_regularity_conventions():
    assert compute(zero_ideal(2), "reg")["value"] == "-inf"
    assert compute(ideal((2, 0), (0, 2)), "reg", GF2)["field"] == "GF(2)"


def test_unknown_quantity(koszul_squares):
    with pytest.raises(DomainError):
        compute(koszul_squares, "volume")
