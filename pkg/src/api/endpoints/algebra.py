"""Algebra endpoints: single-ideal queries, witnesses and theorem checks."""

import logging
from typing import Any

from fastapi import APIRouter
from pydantic import BaseModel, Field

from src.config.settings import settings
from src.models.field import CoefficientField
from src.models.monomial import MonomialIdeal
from src.models.reports import CheckReport, RegWitness
from src.services.betti import regularity
from src.services.compute import Quantity, compute
from src.services.corpus import CorpusItem
from src.services.degree_complex import reg_witness_search, verify_witness
from src.services.ideals import minimize
from src.services.runner import Grid, RunSummary, parse_suite, run_corpus

router = APIRouter()
logger = logging.getLogger(__name__)


class IdealPayload(BaseModel):
    """A monomial ideal as its variable count and exponent tuples."""
    n: int = Field(ge=1)
    generators: list[list[int]] = Field(default_factory=list)

    def to_ideal(self) -> MonomialIdeal:
        return minimize((tuple(g) for g in self.generators), self.n)


class ComputeRequest(BaseModel):
    ideal: IdealPayload
    quantity: Quantity
    field: str = settings.default_field
    m: int = Field(default=1, ge=1)
    s: int = Field(default=1, ge=1)


class WitnessRequest(BaseModel):
    ideal: IdealPayload
    field: str = settings.default_field
    box: list[int] | None = None


class WitnessResponse(BaseModel):
    ideal: str
    witness: RegWitness
    verified: bool
    regularity: int | str | None = None
    lower_bound_only: bool


class CheckRequest(BaseModel):
    ideal: IdealPayload
    suite: list[str] = Field(default_factory=lambda: ["all"])
    field: str = settings.default_field
    m_max: int = Field(default=settings.grid_m_max, ge=1, le=4)
    k_max: int = Field(default=settings.grid_k_max, ge=1, le=4)
    s_max: int = Field(default=settings.grid_s_max, ge=1, le=4)


class CheckResponse(BaseModel):
    reports: list[CheckReport]
    summary: RunSummary


@router.post("/compute")
def compute_quantity(request: ComputeRequest) -> dict[str, Any]:
    """Evaluate one quantity (reg, radical, sympow, closure, ...) of an ideal."""
    I = request.ideal.to_ideal()
    return compute(I, request.quantity, CoefficientField.parse(request.field), request.m, request.s)


@router.post("/witness", response_model=WitnessResponse)
def witness(request: WitnessRequest) -> WitnessResponse:
    """Regularity witness search, verified from scratch."""
    I = request.ideal.to_ideal()
    coefficients = CoefficientField.parse(request.field)
    box = tuple(request.box) if request.box is not None else None
    w = reg_witness_search(I, coefficients, box=box)
    return WitnessResponse(
        ideal=str(I),
        witness=w,
        verified=verify_witness(I, w, coefficients),
        regularity=regularity(I, coefficients).to_json() if box is None else None,
        lower_bound_only=box is not None,
    )


@router.post("/check", response_model=CheckResponse)
def check(request: CheckRequest) -> CheckResponse:
    """Run the selected theorem suites on one ideal."""
    I = request.ideal.to_ideal()
    grid = Grid(m_max=request.m_max, k_max=request.k_max, s_max=request.s_max)
    result = run_corpus(
        [CorpusItem(index=0, label="request", ideal=I)],
        parse_suite(request.suite),
        CoefficientField.parse(request.field),
        grid,
    )
    logger.info(f"checked {I}: {result.summary.by_status}")
    return CheckResponse(reports=result.reports, summary=result.summary)
