"""Exact monomial-ideal arithmetic."""

from __future__ import annotations

import logging
from collections.abc import Iterable
from functools import lru_cache, reduce
from itertools import product

from src.models.errors import DomainError, ExponentOverflowError, MalformedInputError
from sympy.polys.monomials import (
    monomial_deg,
    monomial_divides,
    monomial_gcd,
    monomial_lcm,
    monomial_ldiv,
    monomial_mul,
)

from src.models.monomial import MAX_EXPONENT, Monomial, MonomialIdeal, squarefree_part

logger = logging.getLogger(__name__)


def _check_monomial(u: Monomial, n: int) -> None:
    if len(u) != n:
        raise MalformedInputError(f"monomial {u} has length {len(u)}, expected {n}")
    for e in u:
        if e < 0:
            raise MalformedInputError(f"monomial {u} has a negative exponent")
        if e > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {e} in {u} exceeds {MAX_EXPONENT}")


def minimize(gens: Iterable[Monomial], n: int) -> MonomialIdeal:
    """The ideal generated by ``gens``, reduced to its minimal generating set."""
    candidates = set()
    for u in gens:
        u = tuple(int(e) for e in u)
        _check_monomial(u, n)
        candidates.add(u)
    # a proper divisor always has strictly smaller degree
    kept: list[Monomial] = []
    for u in sorted(candidates, key=lambda v: (monomial_deg(v), v)):
        if not any(monomial_divides(v, u) for v in kept):
            kept.append(u)
    return MonomialIdeal(n=n, gens=tuple(sorted(kept)))


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n=n, gens=())


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n=n, gens=((0,) * n,))


def variable_ideal(n: int, cover: int) -> MonomialIdeal:
    """The monomial prime generated by the variables in the bitmask ``cover``."""
    gens = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n) if cover >> i & 1]
    return MonomialIdeal(n=n, gens=tuple(sorted(gens)))


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.n != J.n:
        raise MalformedInputError(f"ideals live in {I.n} and {J.n} variables")


def contains(I: MonomialIdeal, u: Monomial) -> bool:
    """Whether the monomial u lies in I."""
    _check_monomial(u, I.n)
    return any(monomial_divides(g, u) for g in I.gens)


def is_subideal(J: MonomialIdeal, I: MonomialIdeal) -> bool:
    """Whether J ⊆ I."""
    _same_ring(I, J)
    return all(contains(I, u) for u in J.gens)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return minimize(I.gens + J.gens, I.n)


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return minimize((monomial_mul(u, v) for u, v in product(I.gens, J.gens)), I.n)


@lru_cache(maxsize=4096)
def power(I: MonomialIdeal, m: int) -> MonomialIdeal:
    """I^m for m >= 1."""
    if m < 1:
        raise DomainError(f"power exponent must be positive, got {m}")
    if m == 1:
        return I
    half = power(I, m // 2)
    result = multiply(half, half)
    return multiply(result, I) if m % 2 else result


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return minimize((monomial_lcm(u, v) for u, v in product(I.gens, J.gens)), I.n)


def colon_monomial(I: MonomialIdeal, v: Monomial) -> MonomialIdeal:
    """I : v, generated by u / gcd(u, v) over u in G(I)."""
    if not v:
        return I
    _check_monomial(v, I.n)
    return minimize((monomial_ldiv(u, monomial_gcd(u, v)) for u in I.gens), I.n)


def saturate_monomial(I: MonomialIdeal, v: Monomial) -> MonomialIdeal:
    """I : v^∞ by iterating the colon to a fixed point."""
    current = I
    while True:
        nxt = colon_monomial(current, v)
        if nxt == current:
            return current
        current = nxt


@lru_cache(maxsize=4096)
def radical(I: MonomialIdeal) -> MonomialIdeal:
    return minimize((squarefree_part(u) for u in I.gens), I.n)


def _require_nonzero(I: MonomialIdeal, what: str) -> None:
    if I.is_zero:
        raise DomainError(f"{what} is undefined for the zero ideal")


def gamma(I: MonomialIdeal) -> int:
    """Least positive exponent of a variable dividing a minimal generator."""
    if not I.is_proper_nonzero:
        raise DomainError("gamma needs a nonzero proper ideal")
    return min(e for u in I.gens for e in u if e > 0)


def mu(I: MonomialIdeal) -> int:
    _require_nonzero(I, "mu")
    return len(I.gens)


def lcm_of_gens(I: MonomialIdeal) -> Monomial:
    _require_nonzero(I, "lcm_of_gens")
    return reduce(monomial_lcm, I.gens)


def per_variable_max(I: MonomialIdeal) -> tuple[int, ...]:
    """ρ(I): the largest exponent of each variable among the generators."""
    return lcm_of_gens(I)
