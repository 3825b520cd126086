"""Simplicial complexes on the vertex set {1..n}, stored by facets.

Faces are vertex bitmasks: bit j stands for vertex j+1. The void complex has no
facets at all; the irrelevant complex has the single facet ∅ (mask 0).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from src.models.errors import DomainError

MAX_VERTICES = 64


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, including ``mask`` itself and ∅."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def vertices_of(mask: int) -> tuple[int, ...]:
    """1-based vertex labels of a face."""
    return tuple(j + 1 for j in range(mask.bit_length()) if mask >> j & 1)


def face_order_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Canonical face order: by size, then lexicographically by vertices."""
    return mask.bit_count(), vertices_of(mask)


def maximal_sets(masks: Iterable[int]) -> frozenset[int]:
    """Inclusion-maximal members of a family of bitmasks."""
    ordered = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in ordered:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return frozenset(kept)


@dataclass(frozen=True, slots=True)
class SimplicialComplex:
    n: int
    facets: frozenset[int]

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[int]) -> SimplicialComplex:
        if n > MAX_VERTICES:
            raise DomainError(f"at most {MAX_VERTICES} vertices are supported, got {n}")
        return cls(n=n, facets=maximal_sets(facets))

    @classmethod
    def void(cls, n: int) -> SimplicialComplex:
        return cls(n=n, facets=frozenset())

    @classmethod
    def irrelevant(cls, n: int) -> SimplicialComplex:
        return cls(n=n, facets=frozenset({0}))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == frozenset({0})

    @property
    def dimension(self) -> int:
        """Largest face size minus one; -1 for {∅}, and -2 for the void complex."""
        if self.is_void:
            return -2
        return max(f.bit_count() for f in self.facets) - 1

    def __contains__(self, face: int) -> bool:
        return any(face & f == face for f in self.facets)

    def faces(self) -> list[int]:
        """All faces in canonical order."""
        seen: set[int] = set()
        for f in self.facets:
            seen.update(submasks(f))
        return sorted(seen, key=face_order_key)

    def f_vector(self) -> dict[int, int]:
        """Face counts keyed by dimension, ∅ counted at dimension -1."""
        counts: dict[int, int] = {}
        for face in self.faces():
            d = face.bit_count() - 1
            counts[d] = counts.get(d, 0) + 1
        return counts

    def relabel(self, perm: tuple[int, ...]) -> SimplicialComplex:
        """Image under the vertex permutation j -> perm[j] (0-based)."""
        def move(mask: int) -> int:
            return sum(1 << perm[j] for j in range(self.n) if mask >> j & 1)

        return SimplicialComplex(n=self.n, facets=frozenset(move(f) for f in self.facets))

    def __str__(self) -> str:
        if self.is_void:
            return "void"
        parts = sorted((vertices_of(f) for f in self.facets), key=lambda v: (len(v), v))
        return "<" + ", ".join("{" + ",".join(map(str, p)) + "}" for p in parts) + ">"
