"""Report and corpus models of the theorem-checking harness."""

from __future__ import annotations

try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):  # type: ignore[no-redef]
        __str__ = str.__str__
        __format__ = str.__format__

        @staticmethod
        def _generate_next_value_(name, start, count, last_values):  # type: ignore[override]
            return name.lower()
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator


class TheoremId(StrEnum):
    RRAD = "RRAD"
    SYM = "SYM"
    CORSYM_I = "CORSYM_I"
    CORSYM_II = "CORSYM_II"
    RNORMAL1 = "RNORMAL1"
    RINTC = "RINTC"
    RINT = "RINT"
    BASE_MV = "BASE_MV"
    DELTA_STAB = "DELTA_STAB"
    PROOF_IDENTITY = "PROOF_IDENTITY"


class CheckStatus(StrEnum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


class RegWitness(BaseModel):
    """A certificate reg(J) >= |a| + i + 1."""

    model_config = ConfigDict(frozen=True)

    a: tuple[int, ...]
    i: int = Field(ge=0)
    face: tuple[int, ...]  # 1-based vertex labels
    value: int
    field: str

    @property
    def face_mask(self) -> int:
        return sum(1 << (v - 1) for v in self.face)


Scalar = int | str | bool | None


class CheckReport(BaseModel):
    """One theorem instance: inputs, intermediate quantities, both sides."""

    theorem_id: TheoremId
    ideal_index: int = 0
    ideal: str
    params: dict[str, Scalar] = Field(default_factory=dict)
    quantities: dict[str, Scalar] = Field(default_factory=dict)
    lhs: int | None = None
    rhs: int | None = None
    slack: int | None = None
    holds: bool | None = None
    status: CheckStatus = CheckStatus.PASS
    reason: str | None = None
    witness: RegWitness | None = None
    field: str
    runtime_ms: float | None = None

    @model_validator(mode="after")
    def _consistent(self) -> CheckReport:
        if self.status is CheckStatus.SKIPPED:
            return self
        if self.lhs is None or self.rhs is None:
            raise ValueError("checked reports need both sides")
        self.slack = self.lhs - self.rhs
        self.holds = self.slack >= 0
        self.status = CheckStatus.PASS if self.holds else CheckStatus.FAIL
        return self

    def sort_key(self) -> tuple[int, str, str]:
        params = ",".join(f"{k}={self.params[k]}" for k in sorted(self.params))
        return self.ideal_index, self.theorem_id.value, params


CorpusMode = Literal["exhaustive-squarefree", "random-monomial", "named-family"]


class CorpusSpec(BaseModel):
    """How to generate a corpus of small ideals."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(default=3, ge=1, le=8)
    mode: CorpusMode = "exhaustive-squarefree"
    degree_cap: int = Field(default=3, ge=1)
    mu_cap: int = Field(default=4, ge=1)
    count: int = Field(default=100, ge=0)
    seed: int = 42
