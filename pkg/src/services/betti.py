"""Multigraded Betti numbers and Castelnuovo-Mumford regularity.

β_{i,a}(I) is the i-th homology of the Taylor complex of G(I) tensored with K
in multidegree a: its basis in position i is the set of (i+1)-subsets σ of
G(I) with lcm(σ) = x^a, and ∂σ keeps only the faces σ \\ {u} whose lcm is
still x^a (every other coefficient is a non-unit monomial and dies in K).
All nonzero multidegrees lie in the lcm lattice of G(I).
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache, total_ordering

import numpy as np
from sympy.polys.monomials import monomial_deg

from src.config.settings import settings
from src.models.errors import DomainError, ResourceLimitError
from src.models.field import RATIONALS, CoefficientField
from src.models.monomial import Monomial, MonomialIdeal
from src.services.homology import SparseMatrix, sparse_rank

logger = logging.getLogger(__name__)


@total_ordering
@dataclass(frozen=True)
class Regularity:
    """An integer regularity, or -inf for the zero module."""

    value: int | None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __int__(self) -> int:
        if self.value is None:
            raise DomainError("the regularity of the zero module is -inf")
        return self.value

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Regularity):
            return NotImplemented
        if self.value is None:
            return other.value is not None
        return other.value is not None and self.value < other.value

    def to_json(self) -> int | str:
        return "-inf" if self.value is None else self.value

    def __str__(self) -> str:
        return str(self.to_json())


MINUS_INFINITY = Regularity(None)


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers, keyed by (i, multidegree)."""

    entries: dict[tuple[int, Monomial], int]
    field: CoefficientField

    def coarse(self) -> dict[tuple[int, int], int]:
        """β_{i,j} = Σ_{|a| = j} β_{i,a}."""
        table: dict[tuple[int, int], int] = defaultdict(int)
        for (i, a), b in self.entries.items():
            table[i, monomial_deg(a)] += b
        return dict(sorted(table.items()))

    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def regularity(self) -> Regularity:
        return Regularity(max(monomial_deg(a) - i for i, a in self.entries))

    def rows(self) -> list[dict[str, object]]:
        return [
            {"i": i, "multidegree": list(a), "degree": monomial_deg(a), "beta": b}
            for (i, a), b in sorted(self.entries.items())
        ]


def lcm_lattice(I: MonomialIdeal) -> dict[Monomial, list[int]]:
    """Group the nonempty generator subsets (as bitmasks) by their lcm."""
    gens = np.array(I.gens, dtype=np.int64).reshape(len(I.gens), I.n)
    lcms = np.zeros((1, I.n), dtype=np.int64)
    for g in gens:
        # rows 2^b .. 2^(b+1)-1 are the subsets containing generator b
        lcms = np.vstack([lcms, np.maximum(lcms, g)])
    unique, inverse = np.unique(lcms[1:], axis=0, return_inverse=True)
    groups: dict[Monomial, list[int]] = {}
    keys = [tuple(int(e) for e in row) for row in unique]
    for offset, g in enumerate(inverse.reshape(-1)):
        groups.setdefault(keys[g], []).append(offset + 1)
    return groups


def _restricted_taylor_betti(
    masks: list[int], coefficients: CoefficientField
) -> dict[int, int]:
    """Homology dimensions of the Taylor complex restricted to one lcm class."""
    members = set(masks)
    by_size: dict[int, list[int]] = defaultdict(list)
    for m in sorted(masks):
        by_size[m.bit_count()].append(m)

    def differential(i: int) -> tuple[SparseMatrix, tuple[int, int]]:
        sources, targets = by_size.get(i + 1, []), by_size.get(i, [])
        index = {t: r for r, t in enumerate(targets)}
        entries: SparseMatrix = {}
        for c, sigma in enumerate(sources):
            pos = 0
            for b in range(sigma.bit_length()):
                if sigma >> b & 1:
                    tau = sigma ^ (1 << b)
                    if tau in members:
                        entries.setdefault(index[tau], {})[c] = -1 if pos % 2 else 1
                    pos += 1
        return entries, (len(targets), len(sources))

    top = max(by_size) - 1
    ranks = {i: sparse_rank(*differential(i), coefficients) for i in range(1, top + 1)}
    betti = {}
    for i in range(top + 1):
        value = len(by_size.get(i + 1, [])) - ranks.get(i, 0) - ranks.get(i + 1, 0)
        if value:
            betti[i] = value
    return betti


@lru_cache(maxsize=2048)
def betti_table(
    I: MonomialIdeal,
    coefficients: CoefficientField = RATIONALS,
    mu_cap: int | None = None,
) -> BettiTable:
    """Multigraded Betti numbers of I over the given field."""
    if I.is_zero:
        raise DomainError("the zero ideal has no Betti table")
    cap = settings.betti_mu_cap if mu_cap is None else mu_cap
    if len(I.gens) > cap:
        raise ResourceLimitError("number of minimal generators", cap, len(I.gens))
    lattice = lcm_lattice(I)
    largest = max(len(masks) for masks in lattice.values())
    if largest > settings.betti_class_cap:
        raise ResourceLimitError(
            "generator subsets in one lcm class", settings.betti_class_cap, largest
        )
    entries: dict[tuple[int, Monomial], int] = {}
    for a, masks in lattice.items():
        for i, b in _restricted_taylor_betti(masks, coefficients).items():
            entries[i, a] = b
    logger.debug(f"Betti table of {I} over {coefficients}: {len(entries)} entries")
    return BettiTable(entries=dict(sorted(entries.items())), field=coefficients)


def regularity(
    I: MonomialIdeal,
    coefficients: CoefficientField = RATIONALS,
    mu_cap: int | None = None,
) -> Regularity:
    """reg(I) = max{|a| - i : β_{i,a}(I) ≠ 0}; -inf for the zero ideal."""
    if I.is_zero:
        return MINUS_INFINITY
    return betti_table(I, coefficients, mu_cap).regularity()
