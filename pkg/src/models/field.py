"""Coefficient fields for homology and Betti numbers."""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import isprime
from sympy.polys.domains import GF, QQ

from src.models.errors import DomainError


class CoefficientField(BaseModel):
    """QQ, or the prime field GF(p)."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["rationals", "prime"] = "rationals"
    characteristic: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _check_characteristic(self) -> CoefficientField:
        if self.kind == "rationals" and self.characteristic != 0:
            raise ValueError("the rationals have characteristic 0")
        if self.kind == "prime" and not isprime(self.characteristic):
            raise ValueError(f"{self.characteristic} is not a prime")
        return self

    @classmethod
    def parse(cls, text: str) -> CoefficientField:
        """Parse a CLI field flag: ``q``, ``f2`` or ``fp:<p>``."""
        token = text.strip().lower()
        if token in ("q", "qq", "rationals"):
            return RATIONALS
        if token == "f2":
            return cls(kind="prime", characteristic=2)
        if token.startswith("fp:"):
            try:
                return cls(kind="prime", characteristic=int(token[3:]))
            except ValueError as e:
                raise DomainError(f"bad prime field {text!r}: {e}") from e
        raise DomainError(f"unknown field {text!r}; use q, f2 or fp:<p>")

    @property
    def domain(self) -> Any:
        """The sympy domain used for exact elimination."""
        return QQ if self.kind == "rationals" else GF(self.characteristic)

    @property
    def label(self) -> str:
        return "QQ" if self.kind == "rationals" else f"GF({self.characteristic})"

    def __str__(self) -> str:
        return self.label


RATIONALS = CoefficientField()
GF2 = CoefficientField(kind="prime", characteristic=2)
