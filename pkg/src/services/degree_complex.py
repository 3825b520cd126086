"""Degree complexes Δ_a(J) = Δ(√(J : x^a)) and the regularity witness search.

reg(J) is the largest |a| + i + 1 over a ∈ N^n, faces F of Δ_a(J) disjoint
from supp(a), and i >= 0 with H̃_{i-1}(lk F) ≠ 0. The search runs over the
clamped box 0 <= a_j <= max(ρ_j - 1, 0): raising a coordinate that already
reaches ρ_j leaves J : x^a and supp(a) unchanged, so a witness there could be
pumped forever, contradicting finiteness of reg.
"""

from __future__ import annotations

import logging
from itertools import product
from math import prod

from sympy.polys.monomials import monomial_deg, monomial_pow

from src.config.settings import settings
from src.models.complex import SimplicialComplex, vertices_of
from src.models.errors import DomainError, ResourceLimitError
from src.models.field import RATIONALS, CoefficientField
from src.models.monomial import Monomial, MonomialIdeal, support
from src.models.reports import RegWitness
from src.services.closures import integral_closure_power, remint_s, symbolic_power
from src.services.combinatorics import link, stanley_reisner
from src.services.homology import reduced_homology
from src.services.ideals import colon_monomial, gamma, per_variable_max, power, radical

logger = logging.getLogger(__name__)


def radical_colon(J: MonomialIdeal, a: Monomial) -> MonomialIdeal:
    return radical(colon_monomial(J, a))


def degree_complex(J: MonomialIdeal, a: Monomial) -> SimplicialComplex:
    if J.is_zero:
        raise DomainError("degree complexes need a nonzero ideal")
    return stanley_reisner(radical_colon(J, a))


def clamped_box(J: MonomialIdeal) -> tuple[int, ...]:
    """Per-coordinate upper bounds max(ρ_j - 1, 0) of the witness search."""
    return tuple(max(r - 1, 0) for r in per_variable_max(J))


def box_points(bounds: tuple[int, ...]) -> list[Monomial]:
    """Lattice points of [0, bounds] by increasing |a|, lexicographic within."""
    return sorted(product(*(range(b + 1) for b in bounds)), key=lambda a: (monomial_deg(a), a))


def _best_at(
    D: SimplicialComplex, a: Monomial, coefficients: CoefficientField
) -> tuple[int, int] | None:
    """Largest i with H̃_{i-1}(lk F) ≠ 0 over admissible faces F, with its face."""
    best: tuple[int, int] | None = None
    supp = support(a)
    for face in D.faces():
        if face & supp:
            continue
        dims = reduced_homology(link(D, face), coefficients).nonzero()
        if not dims:
            continue
        i = max(dims) + 1
        if best is None or i > best[0]:
            best = (i, face)
    return best


def reg_witness_search(
    J: MonomialIdeal,
    coefficients: CoefficientField = RATIONALS,
    box: tuple[int, ...] | None = None,
    box_cap: int | None = None,
) -> RegWitness:
    """Arg-max of |a| + i + 1 over the box; first maximum in search order wins.

    With ``box`` given the search is lower-bound-only: it certifies
    reg(J) >= value without claiming equality.
    """
    if not J.is_proper_nonzero:
        raise DomainError(f"witness search needs a nonzero proper ideal, got {J}")
    bounds = clamped_box(J) if box is None else box
    if len(bounds) != J.n:
        raise DomainError(f"box has {len(bounds)} coordinates, expected {J.n}")
    volume = prod(b + 1 for b in bounds)
    cap = settings.witness_box_cap if box_cap is None else box_cap
    if volume > cap:
        raise ResourceLimitError("witness search box", cap, volume)
    witness: RegWitness | None = None
    for a in box_points(bounds):
        D = degree_complex(J, a)
        if D.is_void:
            continue
        found = _best_at(D, a, coefficients)
        if found is None:
            continue
        i, face = found
        value = monomial_deg(a) + i + 1
        if witness is None or value > witness.value:
            witness = RegWitness(
                a=a, i=i, face=vertices_of(face), value=value, field=coefficients.label
            )
    if witness is None:
        # a proper nonzero ideal always has the a = 0 witness
        raise DomainError(f"no witness found for {J}")
    logger.debug(f"witness for {J}: {witness}")
    return witness


def verify_witness(
    J: MonomialIdeal, w: RegWitness, coefficients: CoefficientField = RATIONALS
) -> bool:
    """Re-derive every invariant of a witness from scratch."""
    D = degree_complex(J, w.a)
    face = w.face_mask
    if face not in D or face & support(w.a):
        return False
    if reduced_homology(link(D, face), coefficients)[w.i - 1] < 1:
        return False
    return w.value == monomial_deg(w.a) + w.i + 1


def check_delta_stability(I: MonomialIdeal, s: int, a: Monomial, closed: bool) -> bool:
    """Whether Δ_a(I^s), or Δ_a of the closure of I^s, equals Δ(√I).

    Only meaningful for |a| <= γ(I)·s - 1, where both are known to coincide.
    """
    if s < 1:
        raise DomainError(f"s must be positive, got {s}")
    limit = gamma(I) * s - 1
    if monomial_deg(a) > limit:
        raise DomainError(f"|a| = {monomial_deg(a)} exceeds γ(I)·s - 1 = {limit}")
    J = integral_closure_power(I, s) if closed else power(I, s)
    return degree_complex(J, a) == stanley_reisner(radical(I))


def sym_case2_identity(I: MonomialIdeal, m: int, k: int, j: int, a: Monomial) -> bool:
    """√(I^(m) : x^a) = √(I^(km+j) : x^((k+1)a))."""
    lhs = radical_colon(symbolic_power(I, m), a)
    rhs = radical_colon(symbolic_power(I, k * m + j), monomial_pow(a, k + 1))
    return lhs == rhs


def rnormal1_case2_identity(
    I: MonomialIdeal, m: int, a: Monomial, s: int | None = None
) -> bool:
    """√(Ī : x^a) = √(I^(sm) : x^((sm)a)), s the closure exponent of I."""
    s = remint_s(I) if s is None else s
    lhs = radical_colon(integral_closure_power(I, 1), a)
    rhs = radical_colon(power(I, s * m), monomial_pow(a, s * m))
    return lhs == rhs


def rint_case2_identity(I: MonomialIdeal, s: int, m: int, a: Monomial) -> bool:
    """√(closure(I^s) : x^a) = √(closure(I^(sm)) : x^(ma))."""
    lhs = radical_colon(integral_closure_power(I, s), a)
    rhs = radical_colon(integral_closure_power(I, s * m), monomial_pow(a, m))
    return lhs == rhs
