"""Reduced simplicial homology over QQ or GF(p)."""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

from sympy.polys.matrices import DomainMatrix

from src.models.complex import SimplicialComplex
from src.models.field import RATIONALS, CoefficientField

logger = logging.getLogger(__name__)

# {row: {column: entry}}, zero entries omitted
SparseMatrix = dict[int, dict[int, int]]


def sparse_rank(
    entries: Mapping[int, Mapping[int, int]],
    shape: tuple[int, int],
    coefficients: CoefficientField = RATIONALS,
) -> int:
    """Rank of a sparse integer matrix read over the given field."""
    if not shape[0] or not shape[1]:
        return 0
    K = coefficients.domain
    rows: dict[int, dict[int, Any]] = {}
    for r, row in entries.items():
        reduced = {c: x for c, x in ((c, K(int(v))) for c, v in row.items()) if x}
        if reduced:
            rows[r] = reduced
    if not rows:
        return 0
    return int(DomainMatrix(rows, shape, K).rank())


def rank_exact(rows: Sequence[Sequence[int]], coefficients: CoefficientField = RATIONALS) -> int:
    """Rank of a dense integer matrix read over the given field, by exact elimination."""
    if not rows or not rows[0]:
        return 0
    entries = {r: {c: int(x) for c, x in enumerate(row) if x} for r, row in enumerate(rows)}
    return sparse_rank(entries, (len(rows), len(rows[0])), coefficients)


@dataclass(frozen=True)
class HomologyDims:
    """dim H̃_i for i >= -1; missing indices are zero."""

    dims: Mapping[int, int] = field(default_factory=dict)

    def __getitem__(self, i: int) -> int:
        return self.dims.get(i, 0)

    def nonzero(self) -> dict[int, int]:
        return {i: d for i, d in sorted(self.dims.items()) if d}

    def euler_characteristic(self) -> int:
        return sum(d if i % 2 == 0 else -d for i, d in self.dims.items())


def boundary_matrix(
    faces_by_dim: Mapping[int, Sequence[int]], d: int
) -> tuple[SparseMatrix, tuple[int, int]]:
    """∂_d from d-faces to (d-1)-faces as a sparse matrix and its shape.

    Rows are (d-1)-faces and columns d-faces, both in the given order.

    Removing the vertex in position p of a face carries the sign (-1)^p.
    """
    sources = faces_by_dim.get(d, [])
    targets = faces_by_dim.get(d - 1, [])
    index = {f: r for r, f in enumerate(targets)}
    entries: SparseMatrix = {}
    for c, face in enumerate(sources):
        pos = 0
        for j in range(face.bit_length()):
            if face >> j & 1:
                entries.setdefault(index[face & ~(1 << j)], {})[c] = -1 if pos % 2 else 1
                pos += 1
    return entries, (len(targets), len(sources))


@lru_cache(maxsize=16384)
def reduced_homology(
    D: SimplicialComplex, coefficients: CoefficientField = RATIONALS
) -> HomologyDims:
    """dim H̃_i(D; K) from the augmented chain complex, ∅ in degree -1.

    The void complex has no chains at all, so every group vanishes; the
    irrelevant complex {∅} has H̃_{-1} = K.
    """
    if D.is_void:
        return HomologyDims()
    faces_by_dim: dict[int, list[int]] = {}
    for face in D.faces():
        faces_by_dim.setdefault(face.bit_count() - 1, []).append(face)
    top = max(faces_by_dim)
    ranks = {
        d: sparse_rank(*boundary_matrix(faces_by_dim, d), coefficients) for d in range(0, top + 1)
    }
    dims = {}
    for d in range(-1, top + 1):
        value = len(faces_by_dim.get(d, [])) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if value:
            dims[d] = value
    return HomologyDims(dims=dims)
