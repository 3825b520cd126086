"""Monomials and monomial ideals.

A monomial is its exponent tuple; position j holds the exponent of x_{j+1}.
A ``MonomialIdeal`` always stores its minimal generating set G(I), sorted
lexicographically, so equal ideals compare and hash equal. Build ideals with
``src.services.ideals.minimize``; the dataclass constructor trusts its input.
"""

from __future__ import annotations

from dataclasses import dataclass

Monomial = tuple[int, ...]

MAX_EXPONENT = 2**63 - 1


def support(u: Monomial) -> int:
    """Support of u as a vertex bitmask (bit j set iff x_{j+1} divides u)."""
    mask = 0
    for j, e in enumerate(u):
        if e:
            mask |= 1 << j
    return mask


def squarefree_part(u: Monomial) -> Monomial:
    return tuple(min(e, 1) for e in u)


def mask_to_monomial(mask: int, n: int) -> Monomial:
    """x_F for a vertex bitmask F."""
    return tuple((mask >> j) & 1 for j in range(n))


def format_monomial(u: Monomial) -> str:
    factors = []
    for j, e in enumerate(u):
        if e == 1:
            factors.append(f"x{j + 1}")
        elif e > 1:
            factors.append(f"x{j + 1}^{e}")
    return "*".join(factors) if factors else "1"


@dataclass(frozen=True, slots=True)
class MonomialIdeal:
    """A monomial ideal in n variables, stored by its minimal generators."""

    n: int
    gens: tuple[Monomial, ...]

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def is_proper_nonzero(self) -> bool:
        return not self.is_zero and not self.is_unit

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for u in self.gens for e in u)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return "(" + ", ".join(format_monomial(u) for u in self.gens) + ")"
