"""Single-ideal queries shared by the CLI and the HTTP surface."""

from __future__ import annotations

import logging
from typing import Any, Literal, get_args

from src.models.errors import DomainError
from src.models.field import RATIONALS, CoefficientField
from src.models.monomial import MonomialIdeal
from src.services.betti import betti_table, regularity
from src.services.closures import integral_closure_power, remint_s, symbolic_power
from src.services.combinatorics import height
from src.services.ideals import gamma, mu, radical

logger = logging.getLogger(__name__)

Quantity = Literal["reg", "radical", "sympow", "closure", "gamma", "height", "betti", "mu", "remint"]
QUANTITIES: tuple[str, ...] = get_args(Quantity)


def _ideal_json(J: MonomialIdeal) -> dict[str, Any]:
    return {"n": J.n, "generators": [list(u) for u in J.gens], "text": str(J)}


def compute(
    I: MonomialIdeal,
    quantity: str,
    coefficients: CoefficientField = RATIONALS,
    m: int = 1,
    s: int = 1,
) -> dict[str, Any]:
    """Evaluate one quantity of I as a JSON-ready mapping."""
    result: dict[str, Any] = {"quantity": quantity, "ideal": str(I)}
    match quantity:
        case "reg":
            result["field"] = coefficients.label
            result["value"] = regularity(I, coefficients).to_json()
        case "radical":
            result["value"] = _ideal_json(radical(I))
        case "sympow":
            result["m"] = m
            result["value"] = _ideal_json(symbolic_power(I, m))
        case "closure":
            result["s"] = s
            result["value"] = _ideal_json(integral_closure_power(I, s))
        case "gamma":
            result["value"] = gamma(I)
        case "height":
            result["value"] = height(I)
        case "mu":
            result["value"] = mu(I)
        case "remint":
            result["value"] = remint_s(I)
        case "betti":
            table = betti_table(I, coefficients)
            result["field"] = coefficients.label
            result["value"] = {
                "multigraded": table.rows(),
                "coarse": [
                    {"i": i, "j": j, "beta": b} for (i, j), b in table.coarse().items()
                ],
                "regularity": table.regularity().to_json(),
            }
        case _:
            raise DomainError(f"unknown quantity {quantity!r}; choose from {list(QUANTITIES)}")
    logger.debug(f"computed {quantity} of {I}")
    return result
