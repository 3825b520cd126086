"""Theorem-instance checkers.

Each checker evaluates one inequality on one ideal and parameter choice and
returns a ``CheckReport``. Both sides are computed with the Betti oracle; the
witness search independently reproduces the regularity of the larger side,
and a witness of the smaller side is carried over to the larger ideal the
way the inequality's proof does it, then re-verified there.
Cap violations become SKIPPED reports, never passes. ≤-form statements are
normalized so that lhs is the side expected to be larger.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from math import prod

from sympy.polys.monomials import monomial_deg, monomial_mul, monomial_pow

from src.config.settings import settings
from src.models.errors import DomainError, ResourceLimitError
from src.models.field import GF2, RATIONALS, CoefficientField
from src.models.monomial import Monomial, MonomialIdeal, format_monomial
from src.models.reports import CheckReport, CheckStatus, RegWitness, Scalar, TheoremId
from src.services.betti import regularity
from src.services.closures import (
    integral_closure_power,
    is_integrally_closed,
    remint_s,
    symbolic_power,
)
from src.services.combinatorics import height
from src.services.degree_complex import (
    box_points,
    check_delta_stability,
    reg_witness_search,
    rint_case2_identity,
    rnormal1_case2_identity,
    sym_case2_identity,
    verify_witness,
)
from src.services.ideals import gamma, mu, per_variable_max, power, radical

logger = logging.getLogger(__name__)

IDENTITIES = ("sym_case2", "rnormal1_case2", "rint_case2")


@dataclass(frozen=True)
class Transport:
    """How a witness of ``source`` moves to a witness of ``target``.

    Below ``threshold`` the exponent gains ``shift`` on each of the first
    ``spread`` vertices outside the face; from ``threshold`` on it is scaled
    by ``scale``. The face and homological index stay put.
    """

    source: MonomialIdeal
    target: MonomialIdeal
    threshold: int
    shift: int
    scale: int
    spread: int = 1


def transport_witness(w: RegWitness, rule: Transport) -> RegWitness | None:
    """The witness of ``rule.target`` built from ``w``; None without enough free vertices."""
    n = rule.target.n
    if monomial_deg(w.a) >= rule.threshold:
        b = monomial_pow(w.a, rule.scale)
    else:
        free = [j for j in range(n) if not w.face_mask >> j & 1][: rule.spread]
        if len(free) < rule.spread:
            return None
        b = monomial_mul(w.a, tuple(rule.shift if j in free else 0 for j in range(n)))
    return RegWitness(a=b, i=w.i, face=w.face, value=monomial_deg(b) + w.i + 1, field=w.field)


@dataclass
class _Outcome:
    lhs: int
    rhs: int
    quantities: dict[str, Scalar] = field(default_factory=dict)
    # ideal whose regularity is the larger side, with that regularity
    witness_target: tuple[MonomialIdeal, int] | None = None
    transport: Transport | None = None


def _reg(J: MonomialIdeal, coefficients: CoefficientField) -> int:
    return int(regularity(J, coefficients))


def _attach_transport(
    rule: Transport, q: dict[str, Scalar], coefficients: CoefficientField
) -> None:
    try:
        seed = reg_witness_search(rule.source, coefficients)
    except ResourceLimitError as e:
        q["transported_witness_valid"] = None
        q["transport_skipped"] = str(e)
        return
    moved = transport_witness(seed, rule)
    valid = moved is not None and verify_witness(rule.target, moved, coefficients)
    q["transported_witness_valid"] = valid
    q["transported_value"] = None if moved is None else moved.value
    q["transported_a"] = None if moved is None else format_monomial(moved.a)
    if not valid:
        logger.error(f"witness {seed.a} of {rule.source} does not carry over to {rule.target}")


def _run(
    theorem: TheoremId,
    I: MonomialIdeal,
    params: dict[str, Scalar],
    coefficients: CoefficientField,
    index: int,
    attach_witness: bool | None,
    body: Callable[[], _Outcome],
) -> CheckReport:
    start = time.perf_counter()
    common = {
        "theorem_id": theorem,
        "ideal_index": index,
        "ideal": str(I),
        "params": params,
        "field": coefficients.label,
    }
    try:
        outcome = body()
    except ResourceLimitError as e:
        logger.warning(f"{theorem} skipped on {I} {params}: {e}")
        return CheckReport(
            **common,
            status=CheckStatus.SKIPPED,
            reason=str(e),
            runtime_ms=(time.perf_counter() - start) * 1000,
        )
    witness = None
    use_witness = settings.attach_witness if attach_witness is None else attach_witness
    if use_witness and outcome.witness_target is not None:
        target, reg_value = outcome.witness_target
        try:
            witness = reg_witness_search(target, coefficients)
            outcome.quantities["witness_value"] = witness.value
            outcome.quantities["oracle_agreement"] = witness.value == reg_value
            if witness.value != reg_value:
                logger.error(
                    f"witness search gives {witness.value} but Betti oracle gives "
                    f"{reg_value} for {target}"
                )
        except ResourceLimitError as e:
            outcome.quantities["witness_value"] = None
            outcome.quantities["witness_skipped"] = str(e)
    if use_witness and outcome.transport is not None:
        _attach_transport(outcome.transport, outcome.quantities, coefficients)
    report = CheckReport(
        **common,
        quantities=outcome.quantities,
        lhs=outcome.lhs,
        rhs=outcome.rhs,
        witness=witness,
        runtime_ms=(time.perf_counter() - start) * 1000,
    )
    if not report.holds:
        logger.error(f"{theorem} FAILS on {I} {params}: lhs={report.lhs} rhs={report.rhs}")
    return report


def _require_squarefree(I: MonomialIdeal) -> None:
    if not I.is_proper_nonzero or not I.is_squarefree:
        raise DomainError(f"expected a nonzero proper squarefree ideal, got {I}")


def _require_positive(**values: int) -> None:
    for name, v in values.items():
        if v < 1:
            raise DomainError(f"{name} must be positive, got {v}")


def check_rrad(
    I: MonomialIdeal,
    coefficients: CoefficientField = RATIONALS,
    index: int = 0,
    attach_witness: bool | None = None,
    compare_fields: bool | None = None,
) -> CheckReport:
    """reg(I) >= reg(√I) + (γ(I) - 1)·height(I)."""
    if not I.is_proper_nonzero:
        raise DomainError(f"expected a nonzero proper ideal, got {I}")
    compare = settings.compare_fields if compare_fields is None else compare_fields

    def body() -> _Outcome:
        r, rr = _reg(I, coefficients), _reg(radical(I), coefficients)
        g, h = gamma(I), height(I)
        q: dict[str, Scalar] = {"reg": r, "reg_radical": rr, "gamma": g, "height": h, "mu": mu(I)}
        if compare and coefficients == RATIONALS:
            r2 = _reg(I, GF2)
            q["reg_gf2"] = r2
            q["field_sensitive"] = r2 != r
            if r2 != r:
                logger.warning(f"regularity of {I} depends on the field: QQ {r}, GF(2) {r2}")
        rule = Transport(radical(I), I, threshold=1, shift=g - 1, scale=1, spread=h)
        return _Outcome(r, rr + (g - 1) * h, q, (I, r), rule)

    return _run(TheoremId.RRAD, I, {}, coefficients, index, attach_witness, body)


def check_sym(
    I: MonomialIdeal,
    m: int,
    k: int,
    j: int,
    coefficients: CoefficientField = RATIONALS,
    index: int = 0,
    attach_witness: bool | None = None,
) -> CheckReport:
    """reg(I^(km+j)) >= reg(I^(m)) + (k-1)m + j for m-k <= j <= m."""
    _require_squarefree(I)
    _require_positive(m=m, k=k)
    if not m - k <= j <= m or k * m + j < 1:
        raise DomainError(f"j={j} outside [m-k, m] = [{m - k}, {m}] or km+j < 1")

    def body() -> _Outcome:
        big = symbolic_power(I, k * m + j)
        small = symbolic_power(I, m)
        r_big, r_small = _reg(big, coefficients), _reg(small, coefficients)
        q: dict[str, Scalar] = {
            "reg_symbolic_m": r_small,
            "reg_symbolic_kmj": r_big,
            "mu_symbolic_m": mu(small),
            "mu_symbolic_kmj": mu(big),
        }
        rule = Transport(small, big, threshold=m, shift=(k - 1) * m + j, scale=k + 1)
        return _Outcome(r_big, r_small + (k - 1) * m + j, q, (big, r_big), rule)

    params: dict[str, Scalar] = {"m": m, "k": k, "j": j}
    return _run(TheoremId.SYM, I, params, coefficients, index, attach_witness, body)


def check_corsym(
    I: MonomialIdeal,
    k: int,
    m: int,
    coefficients: CoefficientField = RATIONALS,
    index: int = 0,
    attach_witness: bool | None = None,
) -> CheckReport:
    """reg(I^(km)) >= reg(I^(m)) + (k-1)m."""
    _require_squarefree(I)
    _require_positive(m=m, k=k)

    def body() -> _Outcome:
        big, small = symbolic_power(I, k * m), symbolic_power(I, m)
        r_big, r_small = _reg(big, coefficients), _reg(small, coefficients)
        q: dict[str, Scalar] = {"reg_symbolic_m": r_small, "reg_symbolic_km": r_big}
        rule = Transport(small, big, threshold=m, shift=(k - 1) * m, scale=k + 1)
        return _Outcome(r_big, r_small + (k - 1) * m, q, (big, r_big), rule)

    params: dict[str, Scalar] = {"k": k, "m": m}
    return _run(TheoremId.CORSYM_I, I, params, coefficients, index, attach_witness, body)


def check_corsym_ii(
    I: MonomialIdeal,
    coefficients: CoefficientField = RATIONALS,
    index: int = 0,
    attach_witness: bool | None = None,
) -> CheckReport:
    """reg(I^(3)) >= reg(I^(2)) + 1."""
    _require_squarefree(I)

    def body() -> _Outcome:
        second, third = symbolic_power(I, 2), symbolic_power(I, 3)
        r2, r3 = _reg(second, coefficients), _reg(third, coefficients)
        q: dict[str, Scalar] = {"reg_symbolic_2": r2, "reg_symbolic_3": r3}
        rule = Transport(second, third, threshold=2, shift=1, scale=2)
        return _Outcome(r3, r2 + 1, q, (third, r3), rule)

    return _run(TheoremId.CORSYM_II, I, {}, coefficients, index, attach_witness, body)


def check_base_mv(
    I: MonomialIdeal,
    m: int,
    coefficients: CoefficientField = RATIONALS,
    index: int = 0,
    attach_witness: bool | None = None,
) -> CheckReport:
    """reg(I) + m - 1 <= min(reg(I^m), reg(I^(m)))."""
    _require_squarefree(I)
    _require_positive(m=m)

    def body() -> _Outcome:
        Im, Ism = power(I, m), symbolic_power(I, m)
        r, rp, rs = _reg(I, coefficients), _reg(Im, coefficients), _reg(Ism, coefficients)
        rhs = r + m - 1
        q: dict[str, Scalar] = {
            "reg": r,
            "reg_power": rp,
            "reg_symbolic": rs,
            "slack_power": rp - rhs,
            "slack_symbolic": rs - rhs,
        }
        target = (Im, rp) if rp <= rs else (Ism, rs)
        # squarefree, so γ(I) = 1 and witnesses of I sit at a = 0
        rule = Transport(I, target[0], threshold=1, shift=m - 1, scale=m)
        return _Outcome(min(rp, rs), rhs, q, target, rule)

    params: dict[str, Scalar] = {"m": m}
    return _run(TheoremId.BASE_MV, I, params, coefficients, index, attach_witness, body)


def check_rnormal1(
    I: MonomialIdeal,
    m: int,
    s_cap: int | None = None,
    coefficients: CoefficientField = RATIONALS,
    index: int = 0,
    attach_witness: bool | None = None,
) -> CheckReport:
    """reg(Ī) <= reg(I^(sm)) - γ(I)(sm - 1), s the least exponent with u^s ∈ I^s on G(Ī)."""
    if not I.is_proper_nonzero:
        raise DomainError(f"expected a nonzero proper ideal, got {I}")
    _require_positive(m=m)

    def body() -> _Outcome:
        s = remint_s(I, s_cap)
        g = gamma(I)
        big = power(I, s * m)
        r_big = _reg(big, coefficients)
        closure = integral_closure_power(I, 1)
        r_closure = _reg(closure, coefficients)
        q: dict[str, Scalar] = {
            "s_used": s,
            "gamma": g,
            "reg_closure": r_closure,
            "reg_power_sm": r_big,
            "mu_power_sm": mu(big),
        }
        rule = Transport(closure, big, threshold=g, shift=g * (s * m - 1), scale=s * m)
        return _Outcome(r_big - g * (s * m - 1), r_closure, q, (big, r_big), rule)

    params: dict[str, Scalar] = {"m": m}
    return _run(TheoremId.RNORMAL1, I, params, coefficients, index, attach_witness, body)


def check_rintc(
    I: MonomialIdeal,
    m: int,
    coefficients: CoefficientField = RATIONALS,
    index: int = 0,
    attach_witness: bool | None = None,
) -> CheckReport:
    """reg(I^m) >= reg(I) + γ(I)(m - 1) for integrally closed I."""
    if not I.is_proper_nonzero:
        raise DomainError(f"expected a nonzero proper ideal, got {I}")
    _require_positive(m=m)
    if not is_integrally_closed(I):
        raise DomainError(f"{I} is not integrally closed")

    def body() -> _Outcome:
        g = gamma(I)
        Im = power(I, m)
        r, rm = _reg(I, coefficients), _reg(Im, coefficients)
        q: dict[str, Scalar] = {"gamma": g, "reg": r, "reg_power": rm}
        rule = Transport(I, Im, threshold=g, shift=g * (m - 1), scale=m)
        return _Outcome(rm, r + g * (m - 1), q, (Im, rm), rule)

    params: dict[str, Scalar] = {"m": m}
    return _run(TheoremId.RINTC, I, params, coefficients, index, attach_witness, body)


def check_rint(
    I: MonomialIdeal,
    s: int,
    m: int,
    coefficients: CoefficientField = RATIONALS,
    index: int = 0,
    attach_witness: bool | None = None,
) -> CheckReport:
    """reg(closure(I^(sm))) >= reg(closure(I^s)) + γ(I)·s·(m - 1)."""
    if not I.is_proper_nonzero:
        raise DomainError(f"expected a nonzero proper ideal, got {I}")
    _require_positive(s=s, m=m)

    def body() -> _Outcome:
        g = gamma(I)
        big = integral_closure_power(I, s * m)
        small = integral_closure_power(I, s)
        r_big, r_small = _reg(big, coefficients), _reg(small, coefficients)
        q: dict[str, Scalar] = {
            "gamma": g,
            "reg_closure_s": r_small,
            "reg_closure_sm": r_big,
            "mu_closure_sm": mu(big),
        }
        rule = Transport(small, big, threshold=g * s, shift=g * s * (m - 1), scale=m)
        return _Outcome(r_big, r_small + g * s * (m - 1), q, (big, r_big), rule)

    params: dict[str, Scalar] = {"s": s, "m": m}
    return _run(TheoremId.RINT, I, params, coefficients, index, attach_witness, body)


def _count_cells(
    cells: list[Monomial], test: Callable[[Monomial], bool]
) -> _Outcome:
    failing = [a for a in cells if not test(a)]
    q: dict[str, Scalar] = {"cells": len(cells), "failures": len(failing)}
    if failing:
        q["first_failure"] = format_monomial(failing[0])
    return _Outcome(len(cells) - len(failing), len(cells), q)


def _box_volume(bounds: tuple[int, ...]) -> int:
    return prod(b + 1 for b in bounds)


def check_delta_stability_cell(
    I: MonomialIdeal,
    s: int,
    closed: bool,
    coefficients: CoefficientField = RATIONALS,
    index: int = 0,
) -> CheckReport:
    """Δ_a(I^s) (or of its closure) equals Δ(√I) for every |a| <= γ(I)s - 1."""
    if not I.is_proper_nonzero:
        raise DomainError(f"expected a nonzero proper ideal, got {I}")
    _require_positive(s=s)

    def body() -> _Outcome:
        limit = gamma(I) * s - 1
        bounds = tuple(max(s * r - 1, 0) for r in per_variable_max(I))
        if _box_volume(bounds) > settings.witness_box_cap:
            raise ResourceLimitError("stability box", settings.witness_box_cap, _box_volume(bounds))
        cells = [a for a in box_points(bounds) if monomial_deg(a) <= limit]
        outcome = _count_cells(cells, lambda a: check_delta_stability(I, s, a, closed))
        outcome.quantities["gamma"] = gamma(I)
        return outcome

    params: dict[str, Scalar] = {"s": s, "closed": closed}
    return _run(TheoremId.DELTA_STAB, I, params, coefficients, index, False, body)


def _identity_cells(J: MonomialIdeal, threshold: int) -> list[Monomial]:
    bounds = per_variable_max(J)
    if _box_volume(bounds) > settings.witness_box_cap:
        raise ResourceLimitError("identity sample box", settings.witness_box_cap, _box_volume(bounds))
    cells = [a for a in box_points(bounds) if monomial_deg(a) >= threshold]
    return cells[: settings.identity_sample_cap]


def check_proof_identity(
    I: MonomialIdeal,
    identity: str,
    params: dict[str, int],
    coefficients: CoefficientField = RATIONALS,
    index: int = 0,
) -> CheckReport:
    """Case-2 radical-colon identities from the proofs, on sampled a.

    ``sym_case2`` (params m, k, j; |a| >= m), ``rnormal1_case2`` (params m;
    |a| >= γ(I)) and ``rint_case2`` (params s, m; |a| >= γ(I)s).
    """
    if not I.is_proper_nonzero:
        raise DomainError(f"expected a nonzero proper ideal, got {I}")
    if identity not in IDENTITIES:
        raise DomainError(f"unknown identity {identity!r}; expected one of {IDENTITIES}")

    def body() -> _Outcome:
        if identity == "sym_case2":
            _require_squarefree(I)
            m, k, j = params["m"], params["k"], params["j"]
            cells = _identity_cells(symbolic_power(I, m), m)
            return _count_cells(cells, lambda a: sym_case2_identity(I, m, k, j, a))
        if identity == "rnormal1_case2":
            m = params["m"]
            s = remint_s(I)
            cells = _identity_cells(integral_closure_power(I, 1), gamma(I))
            outcome = _count_cells(cells, lambda a: rnormal1_case2_identity(I, m, a, s))
            outcome.quantities["s_used"] = s
            return outcome
        s, m = params["s"], params["m"]
        cells = _identity_cells(integral_closure_power(I, s), gamma(I) * s)
        return _count_cells(cells, lambda a: rint_case2_identity(I, s, m, a))

    report_params: dict[str, Scalar] = {"identity": identity, **params}
    return _run(
        TheoremId.PROOF_IDENTITY, I, report_params, coefficients, index, False, body
    )
