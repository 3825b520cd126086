"""Tests for corpus runs."""

import sys
from types import SimpleNamespace

import pytest

from src.models.errors import DomainError
from src.models.reports import CheckStatus, CorpusSpec, TheoremId
from src.services import runner
from src.services.corpus import CorpusItem
from src.services.ideals import unit_ideal
from src.services.runner import Grid, parse_suite, run_corpus
from tests.conftest import ideal


@pytest.fixture
def items(triangle, koszul_squares):
    return [
        CorpusItem(index=0, label="triangle", ideal=triangle),
        CorpusItem(index=1, label="koszul", ideal=koszul_squares),
    ]


def test_sym_grid():
    assert Grid(m_max=1, k_max=1, s_max=1).sym_triples() == [(1, 1, 0), (1, 1, 1)]
    triples = Grid(m_max=2, k_max=2, s_max=2).sym_triples()
    assert len(triples) == 10
    assert (1, 2, -1) in triples
    assert all(k * m + j >= 1 and m - k <= j <= m for m, k, j in triples)


def test_parse_suite():
    assert parse_suite(["corsym"]) == {TheoremId.CORSYM_I, TheoremId.CORSYM_II}
    assert parse_suite(["all"]) == set(TheoremId)
    with pytest.raises(DomainError):
        parse_suite(["everything"])


def test_empty_suite(items):
    result = run_corpus(items, frozenset())
    assert result.reports == []
    assert result.summary.total == 0


def test_squarefree_only_cells(items):
    grid = Grid(m_max=1, k_max=1, s_max=1)
    result = run_corpus(items, parse_suite(["sym", "rrad"]), grid=grid)
    sym = [r for r in result.reports if r.theorem_id is TheoremId.SYM]
    assert {r.ideal_index for r in sym} == {0}
    assert len([r for r in result.reports if r.theorem_id is TheoremId.RRAD]) == 2


def test_unit_ideal_is_skipped_entirely():
    item = CorpusItem(index=0, label="unit", ideal=unit_ideal(2))
    assert run_corpus([item], parse_suite(["all"])).reports == []


def test_order_and_summary(items):
    grid = Grid(m_max=1, k_max=1, s_max=1)
    result = run_corpus(list(reversed(items)), parse_suite(["all"]), grid=grid)
    keys = [r.sort_key() for r in result.reports]
    assert keys == sorted(keys)
    assert not result.failed
    assert result.summary.failures == []
    assert result.summary.by_status.get(CheckStatus.FAIL.value, 0) == 0
    assert result.summary.sym_grid == [(1, 1, 0), (1, 1, 1)]
    assert any(key.startswith("1:") for key in result.summary.s_values)


def test_deterministic(items):
    grid = Grid(m_max=1, k_max=1, s_max=1)
    first = run_corpus(items, parse_suite(["rrad", "rint"]), grid=grid)
    second = run_corpus(items, parse_suite(["rrad", "rint"]), grid=grid)
    strip = lambda rs: [r.model_dump(exclude={"runtime_ms"}) for r in rs]  # noqa: E731
    assert strip(first.reports) == strip(second.reports)


def test_worker_pool_falls_back_to_serial(items, monkeypatch):
    def broken(*args, **kwargs):
        raise RuntimeError("no ray here")

    monkeypatch.setattr(runner, "_with_ray", broken)
    result = run_corpus(items, parse_suite(["rrad"]), jobs=4)
    assert len(result.reports) == 2


def test_integrally_closed_gate(maximal_xy_squared, koszul_squares):
    items = [
        CorpusItem(index=0, label="closed", ideal=maximal_xy_squared),
        CorpusItem(index=1, label="not closed", ideal=koszul_squares),
    ]
    result = run_corpus(items, parse_suite(["rintc"]), grid=Grid(m_max=2, k_max=1, s_max=1))
    assert {r.ideal_index for r in result.reports} == {0}
    assert len(result.reports) == 2


def test_proof_identity_sampling(items):
    grid = Grid(m_max=1, k_max=1, s_max=1)
    result = run_corpus(items, parse_suite(["identity"]), grid=grid)
    assert result.reports
    assert all(r.status is CheckStatus.PASS for r in result.reports)
    assert sum(r.rhs for r in result.reports) > 0


def test_failure_surfaces(items, monkeypatch):
    from src.models.reports import CheckReport

    def failing(I, **kwargs):
        return CheckReport(theorem_id=TheoremId.RRAD, ideal=str(I), lhs=0, rhs=1, field="QQ",
                           ideal_index=kwargs.get("index", 0))

    monkeypatch.setattr(runner.checks, "check_rrad", failing)
    result = run_corpus(items[:1], parse_suite(["rrad"]))
    assert result.failed
    assert "RRAD" in result.summary.failures[0]


def test_random_ideal_all_suites():
    I = ideal((2, 1, 0), (0, 2, 1), (1, 0, 2))
    result = run_corpus([CorpusItem(0, "cyclic", I)], parse_suite(["all"]),
                        grid=Grid(m_max=1, k_max=1, s_max=1))
    assert not result.failed


def test_runs_straight_from_a_spec():
    spec = CorpusSpec(n=2, mode="exhaustive-squarefree")
    result = run_corpus(spec, parse_suite(["rrad"]))
    assert [r.ideal_index for r in result.reports] == [0, 1, 2]
    assert all(r.slack == 0 for r in result.reports)


class _FakeRay:
    """Stands in for the ray module: runs remote calls inline and records lifecycle."""

    def __init__(self, initialized: bool = False):
        self.initialized = initialized
        self.calls: list[str] = []

    def is_initialized(self):
        return self.initialized

    def init(self, **kwargs):
        self.calls.append("init")
        self.initialized = True

    def shutdown(self):
        self.calls.append("shutdown")
        self.initialized = False

    def remote(self, **options):
        def wrap(fn):
            return SimpleNamespace(remote=fn)

        return wrap

    def get(self, futures):
        return list(futures)


def test_worker_pool_shuts_down_what_it_started(items, monkeypatch):
    fake = _FakeRay()
    monkeypatch.setitem(sys.modules, "ray", fake)
    result = run_corpus(items, parse_suite(["rrad"]), jobs=2)
    assert len(result.reports) == 2
    assert fake.calls == ["init", "shutdown"]


def test_worker_pool_leaves_a_running_cluster_up(items, monkeypatch):
    fake = _FakeRay(initialized=True)
    monkeypatch.setitem(sys.modules, "ray", fake)
    run_corpus(items, parse_suite(["rrad"]), jobs=2)
    assert fake.calls == []
    assert fake.is_initialized()
