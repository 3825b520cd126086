"""Exact rational simplex for LP feasibility.

Phase one of the primal simplex method over ``Fraction``: decide whether
``A x = b, x >= 0`` has a solution by minimizing the sum of artificial
variables. Bland's rule (least entering index, least leaving basic index on
ratio ties) rules out cycling.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction

logger = logging.getLogger(__name__)

Number = int | Fraction


class FeasibilityTableau:
    """Dense phase-one tableau for ``A x = b, x >= 0``."""

    def __init__(self, A: Sequence[Sequence[Number]], b: Sequence[Number]) -> None:
        self.m = len(A)
        self.n = len(A[0]) if A else 0
        width = self.n + self.m
        self.rows: list[list[Fraction]] = []
        for i, (row, rhs) in enumerate(zip(A, b, strict=True)):
            if len(row) != self.n:
                raise ValueError("constraint rows differ in length")
            sign = -1 if rhs < 0 else 1
            artificial = [Fraction(0)] * self.m
            artificial[i] = Fraction(1)
            self.rows.append(
                [Fraction(sign * v) for v in row] + artificial + [Fraction(sign * rhs)]
            )
        self.basis = list(range(self.n, width))
        # reduced objective: entry j > 0 means x_j can lower the artificial sum
        self.cost = [sum((r[j] for r in self.rows), Fraction(0)) for j in range(self.n)]
        self.cost += [Fraction(0)] * self.m
        self.cost.append(sum((r[-1] for r in self.rows), Fraction(0)))
        self.pivots = 0

    @property
    def infeasibility(self) -> Fraction:
        """Current sum of the artificial variables."""
        return self.cost[-1]

    def pivot(self, i: int, j: int) -> None:
        row = self.rows[i]
        piv = row[j]
        self.rows[i] = row = [v / piv for v in row]
        for k, other in enumerate(self.rows):
            if k != i and other[j]:
                f = other[j]
                self.rows[k] = [a - f * c for a, c in zip(other, row, strict=True)]
        f = self.cost[j]
        if f:
            self.cost = [a - f * c for a, c in zip(self.cost, row, strict=True)]
        self.basis[i] = j
        self.pivots += 1

    def step(self) -> bool:
        """One Bland pivot; False once the phase-one optimum is reached."""
        entering = next(
            (j for j in range(self.n + self.m) if self.cost[j] > 0 and j not in self.basis),
            None,
        )
        if entering is None:
            return False
        candidates = [
            (r[-1] / r[entering], self.basis[i], i)
            for i, r in enumerate(self.rows)
            if r[entering] > 0
        ]
        # phase one is bounded below, so some row always qualifies
        _, _, leaving = min(candidates)
        self.pivot(leaving, entering)
        return True

    def solve(self) -> bool:
        while self.step():
            pass
        return self.infeasibility == 0

    def solution(self) -> list[Fraction]:
        x = [Fraction(0)] * (self.n + self.m)
        for i, j in enumerate(self.basis):
            x[j] = self.rows[i][-1]
        return x[: self.n]


def is_feasible(A: Sequence[Sequence[Number]], b: Sequence[Number]) -> bool:
    """Whether ``A x = b`` has a nonnegative rational solution."""
    if not A:
        return True
    tableau = FeasibilityTableau(A, b)
    feasible = tableau.solve()
    logger.debug(f"phase one finished after {tableau.pivots} pivots, feasible={feasible}")
    return feasible


def feasible_point(
    A: Sequence[Sequence[Number]], b: Sequence[Number]
) -> list[Fraction] | None:
    """A nonnegative solution of ``A x = b``, or None."""
    tableau = FeasibilityTableau(A, b)
    return tableau.solution() if tableau.solve() else None
