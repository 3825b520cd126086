"""Corpora of small ideals: exhaustive squarefree, seeded random, named families."""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations, permutations

import numpy as np

from src.models.errors import DomainError
from src.models.monomial import MonomialIdeal, mask_to_monomial
from src.models.reports import CorpusSpec
from src.services.ideals import minimize, power, variable_ideal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusItem:
    index: int
    label: str
    ideal: MonomialIdeal


def _permute(u: tuple[int, ...], perm: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(u)
    for j, e in enumerate(u):
        out[perm[j]] = e
    return tuple(out)


def canonical_form(I: MonomialIdeal) -> MonomialIdeal:
    """Lexicographically least image of I under a permutation of the variables."""
    best = min(
        tuple(sorted(_permute(u, perm) for u in I.gens))
        for perm in permutations(range(I.n))
    )
    return MonomialIdeal(n=I.n, gens=best)


EXHAUSTIVE_MAX_N = 5


def antichains(n: int) -> Iterator[tuple[int, ...]]:
    """Nonempty antichains of nonempty subsets of [n], as bitmask tuples."""
    subsets = list(range(1, 1 << n))
    chosen: list[int] = []

    def extend(start: int) -> Iterator[tuple[int, ...]]:
        for k in range(start, len(subsets)):
            s = subsets[k]
            if all(s & c not in (s, c) for c in chosen):
                chosen.append(s)
                yield tuple(chosen)
                yield from extend(k + 1)
                chosen.pop()

    yield from extend(0)


def exhaustive_squarefree(n: int) -> list[MonomialIdeal]:
    """All nonzero proper squarefree ideals on n variables, up to symmetry.

    These are the nonempty antichains of nonempty subsets of [n]; their number
    grows like the Dedekind numbers, so n is capped at 5.
    """
    if not 1 <= n <= EXHAUSTIVE_MAX_N:
        raise DomainError(
            f"exhaustive squarefree corpus needs 1 <= n <= {EXHAUSTIVE_MAX_N}, got {n}"
        )
    seen: set[MonomialIdeal] = set()
    for chosen in antichains(n):
        seen.add(canonical_form(minimize((mask_to_monomial(c, n) for c in chosen), n)))
    ideals = sorted(seen, key=lambda I: (len(I.gens), I.gens))
    logger.info(f"exhaustive squarefree corpus on {n} variables: {len(ideals)} ideals")
    return ideals


def random_monomial(spec: CorpusSpec) -> list[MonomialIdeal]:
    """``spec.count`` random proper nonzero ideals from a seeded generator."""
    rng = np.random.default_rng(spec.seed)
    ideals = []
    for _ in range(spec.count):
        size = int(rng.integers(1, spec.mu_cap + 1))
        gens = []
        for _ in range(size):
            d = int(rng.integers(1, spec.degree_cap + 1))
            # stars and bars: a uniformly random exponent vector of degree d
            bars = np.sort(rng.choice(d + spec.n - 1, spec.n - 1, replace=False))
            cuts = np.concatenate(([-1], bars, [d + spec.n - 1]))
            gens.append(tuple(int(x) for x in np.diff(cuts) - 1))
        ideals.append(minimize(gens, spec.n))
    return ideals


def edge_ideal(n: int, edges: list[tuple[int, int]]) -> MonomialIdeal:
    return minimize((mask_to_monomial((1 << a) | (1 << b), n) for a, b in edges), n)


def named_families(max_vertices: int = 5, max_power: int = 3) -> list[tuple[str, MonomialIdeal]]:
    """Edge ideals of paths, cycles and complete graphs; powers of the maximal ideal."""
    families: list[tuple[str, MonomialIdeal]] = []
    for v in range(2, max_vertices + 1):
        families.append((f"path P{v}", edge_ideal(v, [(i, i + 1) for i in range(v - 1)])))
    for v in range(3, max_vertices + 1):
        families.append((f"cycle C{v}", edge_ideal(v, [(i, (i + 1) % v) for i in range(v)])))
    for v in range(2, max_vertices + 1):
        families.append((f"complete K{v}", edge_ideal(v, list(combinations(range(v), 2)))))
    for n in range(1, 4):
        maximal = variable_ideal(n, (1 << n) - 1)
        for d in range(1, max_power + 1):
            families.append((f"maximal ideal^{d} in {n} variables", power(maximal, d)))
    return families


def generate(spec: CorpusSpec, start: int = 0) -> list[CorpusItem]:
    """The corpus a ``CorpusSpec`` describes, indexed from ``start``."""
    if spec.mode == "exhaustive-squarefree":
        labelled = [(f"squarefree #{i}", I) for i, I in enumerate(exhaustive_squarefree(spec.n))]
    elif spec.mode == "random-monomial":
        labelled = [
            (f"random seed={spec.seed} #{i}", I) for i, I in enumerate(random_monomial(spec))
        ]
    else:
        labelled = named_families()
    return [CorpusItem(start + i, label, I) for i, (label, I) in enumerate(labelled)]


def acceptance_corpus(n: int = 3, seed: int = 42, count: int = 100) -> list[CorpusItem]:
    """Exhaustive squarefree on n variables, then random ideals, then named families."""
    items: list[CorpusItem] = []
    for spec in (
        CorpusSpec(n=n, mode="exhaustive-squarefree"),
        CorpusSpec(n=n, mode="random-monomial", degree_cap=3, mu_cap=4, count=count, seed=seed),
        CorpusSpec(mode="named-family"),
    ):
        items.extend(generate(spec, start=len(items)))
    return items
