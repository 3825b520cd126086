"""Stanley-Reisner dictionary: complexes, links, minimal primes, height."""

from __future__ import annotations

import logging
from functools import lru_cache

from src.models.complex import SimplicialComplex, maximal_sets
from src.models.errors import DomainError
from src.models.monomial import MonomialIdeal, support

logger = logging.getLogger(__name__)


def minimal_transversals(edges: frozenset[int]) -> frozenset[int]:
    """Inclusion-minimal vertex sets meeting every edge of a hypergraph.

    Branch and bound: take the first edge the partial cover misses and branch
    on its vertices; prune partial covers that already contain a found cover.
    An empty edge admits no transversal; no edges admit only ∅.
    """
    if 0 in edges:
        return frozenset()
    # supersets of other edges are hit automatically
    ordered = sorted(_minimal_sets(edges), key=lambda e: (e.bit_count(), e))
    found: list[int] = []

    def branch(cover: int) -> None:
        if any(f & cover == f for f in found):
            return
        for edge in ordered:
            if not edge & cover:
                rest = edge
                while rest:
                    low = rest & -rest
                    branch(cover | low)
                    rest ^= low
                return
        found.append(cover)

    branch(0)
    return frozenset(c for c in found if not any(f != c and f & c == f for f in found))


def _minimal_sets(masks: frozenset[int]) -> list[int]:
    kept: list[int] = []
    for m in sorted(masks, key=lambda x: x.bit_count()):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _supports(I: MonomialIdeal) -> frozenset[int]:
    return frozenset(support(u) for u in I.gens)


@lru_cache(maxsize=4096)
def stanley_reisner(I: MonomialIdeal) -> SimplicialComplex:
    """Δ(I) = {F : x_F ∉ I} for squarefree I, returned by facets.

    Facets are the complements of the minimal vertex covers of the generator
    supports.
    """
    if not I.is_squarefree:
        raise DomainError(f"Stanley-Reisner complex needs a squarefree ideal, got {I}")
    full = (1 << I.n) - 1
    covers = minimal_transversals(_supports(I))
    return SimplicialComplex(n=I.n, facets=frozenset(full & ~c for c in covers))


def link(D: SimplicialComplex, face: int) -> SimplicialComplex:
    """lk_D(F) = {G ⊆ [n] \\ F : G ∪ F ∈ D}."""
    if face not in D:
        raise DomainError(f"face {face:#b} is not in the complex {D}")
    return SimplicialComplex(
        n=D.n, facets=maximal_sets(f & ~face for f in D.facets if f & face == face)
    )


def minimal_primes(I: MonomialIdeal) -> frozenset[int]:
    """Min(I) as vertex bitmasks, each encoding the prime (x_j : j in C)."""
    if not I.is_proper_nonzero:
        raise DomainError("minimal primes need a nonzero proper ideal")
    return minimal_transversals(_supports(I))


def height(I: MonomialIdeal) -> int:
    return min(c.bit_count() for c in minimal_primes(I))
