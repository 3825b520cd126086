"""Tests for corpus generation."""

import pytest

from src.models.errors import DomainError
from src.models.reports import CorpusSpec
from src.services.corpus import (
    acceptance_corpus,
    antichains,
    canonical_form,
    exhaustive_squarefree,
    generate,
    named_families,
    random_monomial,
)
from src.services.ideals import variable_ideal
from tests.conftest import ideal


def test_exhaustive_counts():
    assert len(exhaustive_squarefree(1)) == 1
    assert len(exhaustive_squarefree(2)) == 3
    assert len(exhaustive_squarefree(3)) == 8
    assert len(exhaustive_squarefree(4)) == 28


@pytest.mark.parametrize("n,count", [(1, 1), (2, 4), (3, 18), (4, 166), (5, 7579)])
def test_antichain_counts(n, count):
    # Dedekind numbers minus the empty antichain and {∅}
    assert len(list(antichains(n))) == count


def test_antichains_are_antichains():
    for family in antichains(4):
        assert all(a & b not in (a, b) for a in family for b in family if a != b)


@pytest.mark.slow
def test_exhaustive_on_five_variables():
    assert len(exhaustive_squarefree(5)) == 208


@pytest.mark.parametrize("n", [0, 6, 8])
def test_exhaustive_rejects_large_n(n):
    with pytest.raises(DomainError):
        exhaustive_squarefree(n)
    if n:
        with pytest.raises(DomainError):
            generate(CorpusSpec(n=n, mode="exhaustive-squarefree"))


def test_exhaustive_ideals_are_squarefree_and_proper():
    for I in exhaustive_squarefree(3):
        assert I.is_squarefree
        assert I.is_proper_nonzero


def test_canonical_form_identifies_relabelings():
    assert canonical_form(ideal((1, 0))) == canonical_form(ideal((0, 1)))
    assert canonical_form(ideal((1, 1, 0), (0, 0, 1))) == canonical_form(ideal((1, 0, 0), (0, 1, 1)))


def test_random_corpus_is_reproducible():
    spec = CorpusSpec(n=3, mode="random-monomial", count=20, seed=7)
    assert random_monomial(spec) == random_monomial(spec)
    assert random_monomial(spec) != random_monomial(spec.model_copy(update={"seed": 8}))


def test_random_corpus_respects_caps():
    spec = CorpusSpec(n=3, mode="random-monomial", degree_cap=3, mu_cap=4, count=50, seed=1)
    ideals = random_monomial(spec)
    assert len(ideals) == 50
    for I in ideals:
        assert I.n == 3
        assert I.is_proper_nonzero
        assert 1 <= len(I.gens) <= 4
        assert all(1 <= sum(u) <= 3 for u in I.gens)


def test_named_families():
    families = dict(named_families())
    assert families["cycle C3"] == ideal((1, 1, 0), (0, 1, 1), (1, 0, 1))
    assert families["path P2"] == ideal((1, 1))
    assert families["maximal ideal^1 in 2 variables"] == variable_ideal(2, 0b11)
    assert len(families) == 20


def test_generate_indices():
    items = generate(CorpusSpec(n=2, mode="exhaustive-squarefree"), start=5)
    assert [item.index for item in items] == [5, 6, 7]


def test_acceptance_corpus_layout():
    items = acceptance_corpus(n=3, seed=42, count=100)
    assert len(items) == 8 + 100 + 20
    assert [item.index for item in items] == list(range(len(items)))
    assert items[8].label.startswith("random seed=42")
