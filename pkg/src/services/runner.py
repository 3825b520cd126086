"""Corpus runs: expand each ideal into theorem cells and collect reports.

Items are independent. With more than one job they run as Ray tasks on a
local single-host pool; reports are sorted by (ideal index, theorem, params)
before they leave this module, so the job count never changes the output.
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterable, Iterator
from typing import Any

from pydantic import BaseModel, Field

from src.config.ray_config import WorkerPoolConfig, ray_init_config
from src.config.settings import settings
from src.models.errors import DomainError, ResourceLimitError
from src.models.field import RATIONALS, CoefficientField
from src.models.reports import CheckReport, CheckStatus, CorpusSpec, TheoremId
from src.services import checks
from src.services.closures import is_integrally_closed
from src.services.corpus import CorpusItem, generate

logger = logging.getLogger(__name__)

SUITES: dict[str, frozenset[TheoremId]] = {
    "all": frozenset(TheoremId),
    "rrad": frozenset({TheoremId.RRAD}),
    "sym": frozenset({TheoremId.SYM}),
    "corsym": frozenset({TheoremId.CORSYM_I, TheoremId.CORSYM_II}),
    "rnormal1": frozenset({TheoremId.RNORMAL1}),
    "rintc": frozenset({TheoremId.RINTC}),
    "rint": frozenset({TheoremId.RINT}),
    "base": frozenset({TheoremId.BASE_MV}),
    "delta": frozenset({TheoremId.DELTA_STAB}),
    "identity": frozenset({TheoremId.PROOF_IDENTITY}),
}


class Grid(BaseModel):
    """Parameter ranges: m, k, s run over 1..max."""

    m_max: int = Field(default_factory=lambda: settings.grid_m_max, ge=1)
    k_max: int = Field(default_factory=lambda: settings.grid_k_max, ge=1)
    s_max: int = Field(default_factory=lambda: settings.grid_s_max, ge=1)

    def sym_triples(self) -> list[tuple[int, int, int]]:
        """Legal (m, k, j): m - k <= j <= m and km + j >= 1."""
        return [
            (m, k, j)
            for m in range(1, self.m_max + 1)
            for k in range(1, self.k_max + 1)
            for j in range(m - k, m + 1)
            if k * m + j >= 1
        ]


def parse_suite(names: Iterable[str]) -> frozenset[TheoremId]:
    chosen: set[TheoremId] = set()
    for name in names:
        key = name.strip().lower()
        if key not in SUITES:
            raise DomainError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
        chosen |= SUITES[key]
    return frozenset(chosen)


def check_item(
    item: CorpusItem,
    suite: frozenset[TheoremId],
    coefficients: CoefficientField = RATIONALS,
    grid: Grid | None = None,
) -> list[CheckReport]:
    """Every applicable theorem cell for one corpus ideal."""
    grid = grid or Grid()
    I, idx = item.ideal, item.index
    reports: list[CheckReport] = []
    if not I.is_proper_nonzero:
        return reports
    ms = range(1, grid.m_max + 1)
    ss = range(1, grid.s_max + 1)
    ks = range(1, grid.k_max + 1)
    squarefree = I.is_squarefree
    kw: dict[str, Any] = {"coefficients": coefficients, "index": idx}

    if TheoremId.RRAD in suite:
        reports.append(checks.check_rrad(I, **kw))
    if squarefree and TheoremId.SYM in suite:
        reports.extend(checks.check_sym(I, m, k, j, **kw) for m, k, j in grid.sym_triples())
    if squarefree and TheoremId.CORSYM_I in suite:
        reports.extend(checks.check_corsym(I, k, m, **kw) for k in ks for m in ms)
    if squarefree and TheoremId.CORSYM_II in suite:
        reports.append(checks.check_corsym_ii(I, **kw))
    if squarefree and TheoremId.BASE_MV in suite:
        reports.extend(checks.check_base_mv(I, m, **kw) for m in ms)
    if TheoremId.RNORMAL1 in suite:
        reports.extend(checks.check_rnormal1(I, m, **kw) for m in ms)
    if TheoremId.RINTC in suite and _integrally_closed(I):
        reports.extend(checks.check_rintc(I, m, **kw) for m in ms)
    if TheoremId.RINT in suite:
        reports.extend(checks.check_rint(I, s, m, **kw) for s in ss for m in ms)
    if TheoremId.DELTA_STAB in suite:
        reports.extend(
            checks.check_delta_stability_cell(I, s, closed, **kw)
            for s in ss
            for closed in (False, True)
        )
    if TheoremId.PROOF_IDENTITY in suite:
        if squarefree:
            reports.extend(
                checks.check_proof_identity(I, "sym_case2", {"m": m, "k": k, "j": j}, **kw)
                for m, k, j in grid.sym_triples()
            )
        reports.extend(
            checks.check_proof_identity(I, "rnormal1_case2", {"m": m}, **kw) for m in ms
        )
        reports.extend(
            checks.check_proof_identity(I, "rint_case2", {"s": s, "m": m}, **kw)
            for s in ss
            for m in ms
        )
    return reports


def _integrally_closed(I: Any) -> bool:
    try:
        return is_integrally_closed(I)
    except ResourceLimitError as e:
        logger.warning(f"cannot decide integral closedness of {I}: {e}")
        return False


class RunSummary(BaseModel):
    total: int
    by_status: dict[str, int]
    by_theorem: dict[str, dict[str, int]]
    failures: list[str]
    oracle_mismatches: list[str]
    transport_failures: list[str] = Field(default_factory=list)
    field_sensitive: list[str]
    sym_grid: list[tuple[int, int, int]]
    s_values: dict[str, int]


class RunResult(BaseModel):
    reports: list[CheckReport]
    summary: RunSummary

    @property
    def failed(self) -> bool:
        return bool(self.summary.failures)

    @property
    def skipped(self) -> int:
        return self.summary.by_status.get(CheckStatus.SKIPPED.value, 0)


def summarize(reports: list[CheckReport], grid: Grid) -> RunSummary:
    by_theorem: dict[str, Counter[str]] = {}
    for r in reports:
        by_theorem.setdefault(r.theorem_id.value, Counter())[r.status.value] += 1
    s_values = {
        f"{r.ideal_index}:{r.ideal}": int(r.quantities["s_used"])  # type: ignore[arg-type]
        for r in reports
        if r.theorem_id is TheoremId.RNORMAL1 and r.quantities.get("s_used") is not None
    }
    return RunSummary(
        total=len(reports),
        by_status=dict(sorted(Counter(r.status.value for r in reports).items())),
        by_theorem={k: dict(sorted(v.items())) for k, v in sorted(by_theorem.items())},
        failures=[_describe(r) for r in reports if r.status is CheckStatus.FAIL],
        oracle_mismatches=[
            _describe(r) for r in reports if r.quantities.get("oracle_agreement") is False
        ],
        transport_failures=[
            _describe(r)
            for r in reports
            if r.quantities.get("transported_witness_valid") is False
        ],
        field_sensitive=sorted({r.ideal for r in reports if r.quantities.get("field_sensitive")}),
        sym_grid=grid.sym_triples(),
        s_values=dict(sorted(s_values.items())),
    )


def _describe(r: CheckReport) -> str:
    params = ",".join(f"{k}={v}" for k, v in sorted(r.params.items()))
    return f"#{r.ideal_index} {r.theorem_id.value} {r.ideal} [{params}] lhs={r.lhs} rhs={r.rhs}"


def _serial(
    items: list[CorpusItem], suite: frozenset[TheoremId], coefficients: CoefficientField, grid: Grid
) -> Iterator[CheckReport]:
    for item in items:
        logger.info(f"checking #{item.index} {item.label}: {item.ideal}")
        yield from check_item(item, suite, coefficients, grid)


def _with_ray(
    items: list[CorpusItem],
    suite: frozenset[TheoremId],
    coefficients: CoefficientField,
    grid: Grid,
    pool: WorkerPoolConfig,
) -> list[CheckReport]:
    import ray

    started = not ray.is_initialized()
    if started:
        logger.info(f"starting a local Ray pool with {pool.jobs} workers")
        ray.init(**ray_init_config(pool))
    try:
        remote = ray.remote(num_cpus=pool.num_cpus_per_task, max_retries=pool.max_retries)(
            check_item
        )
        futures = [remote.remote(item, suite, coefficients, grid) for item in items]
        logger.info(f"submitted {len(futures)} corpus items to {pool.jobs} workers")
        return [report for batch in ray.get(futures) for report in batch]
    finally:
        # a pool someone else started stays up
        if started and ray.is_initialized():
            ray.shutdown()


def run_corpus(
    corpus: CorpusSpec | list[CorpusItem],
    suite: frozenset[TheoremId],
    coefficients: CoefficientField = RATIONALS,
    grid: Grid | None = None,
    jobs: int = 1,
) -> RunResult:
    """One report per (ideal, theorem, params) cell, in canonical order."""
    grid = grid or Grid()
    items = generate(corpus) if isinstance(corpus, CorpusSpec) else corpus
    if not suite or not items:
        return RunResult(reports=[], summary=summarize([], grid))
    reports: list[CheckReport] | None = None
    if jobs > 1:
        try:
            reports = _with_ray(items, suite, coefficients, grid, WorkerPoolConfig(jobs=jobs))
        except Exception as e:
            logger.warning(f"worker pool unavailable ({e}); running serially")
    if reports is None:
        reports = list(_serial(items, suite, coefficients, grid))
    reports.sort(key=CheckReport.sort_key)
    summary = summarize(reports, grid)
    logger.info(f"run finished: {summary.by_status}")
    for line in summary.failures:
        logger.error(f"THEOREM FAILURE: {line}")
    for line in summary.transport_failures:
        logger.error(f"witness did not carry over: {line}")
    return RunResult(reports=reports, summary=summary)
