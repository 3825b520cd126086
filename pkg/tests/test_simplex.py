"""Tests for the exact phase-one simplex."""

from fractions import Fraction

from src.services.simplex import FeasibilityTableau, feasible_point, is_feasible


def test_simple_feasible_system():
    A = [[1, 1], [1, -1]]
    b = [4, 2]
    x = feasible_point(A, b)
    assert x == [Fraction(3), Fraction(1)]


def test_negative_solution_is_infeasible():
    # x1 - x2 = -1 with x1 + x2 = 0 forces x2 = 1/2, x1 = -1/2
    assert not is_feasible([[1, -1], [1, 1]], [-1, 0])


def test_negative_right_hand_side():
    assert is_feasible([[-1, 0]], [-3])


def test_rational_vertex():
    x = feasible_point([[2, 0], [0, 3]], [1, 1])
    assert x == [Fraction(1, 2), Fraction(1, 3)]


def test_solution_satisfies_constraints():
    A = [[1, 2, 1, 0], [3, 1, 0, 1], [1, 1, 0, 0]]
    b = [5, 7, 2]
    x = feasible_point(A, b)
    assert x is not None
    assert all(v >= 0 for v in x)
    for row, rhs in zip(A, b):
        assert sum(a * v for a, v in zip(row, x)) == rhs


def test_degenerate_system_terminates():
    # redundant rows make the start degenerate; Bland's rule must not cycle
    A = [[1, 1, 1], [2, 2, 2], [1, 0, -1]]
    b = [0, 0, 0]
    tableau = FeasibilityTableau(A, b)
    assert tableau.solve()
    assert tableau.infeasibility == 0


def test_no_constraints():
    assert is_feasible([], [])
