"""Symbolic powers, integral closures of powers and the closure exponent s.

Integral closure membership is decided on the Newton polyhedron: x^t lies in
the closure of I^s iff t ∈ s·conv(G(I)) + R^n_{>=0}, i.e. iff some λ >= 0 with
Σλ_u = s has Σλ_u·u <= t componentwise. That is an exact LP feasibility
question. Generators of the closure of I^s live in the box 0 <= t_j <= s·ρ_j:
a point with t_j > s·ρ_j stays in the polyhedron after lowering t_j, because
every vertex of s·conv(G(I)) has j-th coordinate at most s·ρ_j.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import product
from math import prod

from sympy.polys.monomials import monomial_deg, monomial_divides, monomial_pow

from src.config.settings import settings
from src.models.errors import DomainError, OracleMismatchError, ResourceLimitError
from src.models.monomial import Monomial, MonomialIdeal
from src.services.combinatorics import minimal_primes
from src.services.ideals import (
    contains,
    intersect,
    minimize,
    per_variable_max,
    power,
    saturate_monomial,
    variable_ideal,
)
from src.services.simplex import is_feasible

logger = logging.getLogger(__name__)


def _require_proper(I: MonomialIdeal, what: str) -> None:
    if not I.is_proper_nonzero:
        raise DomainError(f"{what} needs a nonzero proper ideal, got {I}")


def symbolic_power_saturation(I: MonomialIdeal, m: int) -> MonomialIdeal:
    """I^(m) as ∩_C (I^m : (Π_{j∉C} x_j)^∞) over the minimal primes C."""
    _require_proper(I, "symbolic power")
    if m < 1:
        raise DomainError(f"symbolic power exponent must be positive, got {m}")
    Im = power(I, m)
    components = []
    for cover in sorted(minimal_primes(I)):
        outside = tuple(0 if cover >> j & 1 else 1 for j in range(I.n))
        components.append(saturate_monomial(Im, outside))
    return reduce(intersect, components)


def symbolic_power_squarefree(I: MonomialIdeal, m: int) -> MonomialIdeal:
    """I^(m) = ∩ p^m over the minimal primes p of a squarefree I."""
    _require_proper(I, "symbolic power")
    if not I.is_squarefree:
        raise DomainError(f"the prime-power formula needs a squarefree ideal, got {I}")
    if m < 1:
        raise DomainError(f"symbolic power exponent must be positive, got {m}")
    return reduce(
        intersect,
        (power(variable_ideal(I.n, c), m) for c in sorted(minimal_primes(I))),
    )


@lru_cache(maxsize=2048)
def symbolic_power(I: MonomialIdeal, m: int) -> MonomialIdeal:
    """I^(m); squarefree inputs are computed both ways and must agree."""
    general = symbolic_power_saturation(I, m)
    if I.is_squarefree:
        fast = symbolic_power_squarefree(I, m)
        if fast != general:
            raise OracleMismatchError(
                f"symbolic power paths disagree on {I}, m={m}: {fast} vs {general}"
            )
    return general


@dataclass(frozen=True, slots=True)
class NewtonMembershipQuery:
    """Is ``target`` in scale·NP(I), with NP given by its generator vertices?"""

    target: Monomial
    vertices: tuple[Monomial, ...]
    scale: int = 1

    def __post_init__(self) -> None:
        if self.scale < 1:
            raise DomainError(f"scale must be positive, got {self.scale}")
        if any(len(v) != len(self.target) for v in self.vertices):
            raise DomainError("vertices and target differ in length")


def newton_member(q: NewtonMembershipQuery) -> bool:
    """Exact LP: λ >= 0, Σλ = s, Σλ_u·u + slack = target, slack >= 0."""
    if not q.vertices:
        return False
    n, k = len(q.target), len(q.vertices)
    A = []
    for j in range(n):
        slack = [1 if i == j else 0 for i in range(n)]
        A.append([v[j] for v in q.vertices] + slack)
    A.append([1] * k + [0] * n)
    b = list(q.target) + [q.scale]
    return is_feasible(A, b)


def closure_contains(I: MonomialIdeal, s: int, u: Monomial) -> bool:
    """Whether u lies in the integral closure of I^s."""
    return newton_member(NewtonMembershipQuery(target=u, vertices=I.gens, scale=s))


@lru_cache(maxsize=1024)
def integral_closure_power(
    I: MonomialIdeal, s: int, box_cap: int | None = None
) -> MonomialIdeal:
    """The integral closure of I^s by LP membership over the box [0, s·ρ]."""
    if I.is_zero:
        raise DomainError("integral closure of the zero ideal is not supported")
    if s < 1:
        raise DomainError(f"closure exponent must be positive, got {s}")
    if I.is_unit:
        return I
    bounds = [s * r for r in per_variable_max(I)]
    volume = prod(b + 1 for b in bounds)
    cap = settings.closure_box_cap if box_cap is None else box_cap
    if volume > cap:
        raise ResourceLimitError("closure lattice box", cap, volume)
    Is = power(I, s)
    found: list[Monomial] = []
    points = sorted(product(*(range(b + 1) for b in bounds)), key=lambda t: (monomial_deg(t), t))
    for t in points:
        if any(monomial_divides(g, t) for g in found):
            continue
        if contains(Is, t) or closure_contains(I, s, t):
            found.append(t)
    closure = minimize(found, I.n)
    logger.debug(f"closure of {I}^{s}: {closure}")
    return closure


def is_integrally_closed(I: MonomialIdeal) -> bool:
    return integral_closure_power(I, 1) == I


def power_crosscheck(I: MonomialIdeal, s: int, u: Monomial, k_max: int | None = None) -> int | None:
    """Least k <= k_max with u^k ∈ I^(sk) (ordinary power), or None."""
    limit = settings.crosscheck_k_max if k_max is None else k_max
    for k in range(1, limit + 1):
        if contains(power(I, s * k), monomial_pow(u, k)):
            return k
    return None


def remint_s(I: MonomialIdeal, s_cap: int | None = None) -> int:
    """Least s with u^s ∈ I^s for every minimal generator u of the closure of I."""
    _require_proper(I, "remint_s")
    cap = settings.s_cap if s_cap is None else s_cap
    closure_gens = integral_closure_power(I, 1).gens
    for s in range(1, cap + 1):
        Is = power(I, s)
        if all(contains(Is, monomial_pow(u, s)) for u in closure_gens):
            return s
    raise ResourceLimitError("closure exponent s", cap, cap + 1)
