"""Corpus-wide run over the acceptance corpus."""

import pytest

from src.models.reports import CheckStatus
from src.services.betti import regularity
from src.services.corpus import acceptance_corpus
from src.services.degree_complex import reg_witness_search
from src.services.runner import Grid, parse_suite, run_corpus

pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def corpus():
    return acceptance_corpus(n=3, seed=42, count=100)


def test_witness_matches_oracle_on_corpus(corpus):
    for item in corpus:
        if item.ideal.is_proper_nonzero:
            assert reg_witness_search(item.ideal).value == int(regularity(item.ideal)), item.label


def test_all_suites_hold(corpus):
    result = run_corpus(corpus, parse_suite(["all"]), grid=Grid(m_max=2, k_max=2, s_max=2))
    assert result.summary.failures == []
    assert result.summary.oracle_mismatches == []
    assert result.summary.transport_failures == []
    identity_cells = sum(
        r.rhs for r in result.reports if r.theorem_id == "PROOF_IDENTITY" and r.rhs is not None
    )
    assert identity_cells >= 50
    skipped = [r for r in result.reports if r.status is CheckStatus.SKIPPED]
    assert all(r.reason for r in skipped)
