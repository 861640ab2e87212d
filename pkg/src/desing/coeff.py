"""Coefficient ideals: weighted sums of coefficient slices.

Writing each generator as a polynomial in one distinguished variable
(or in a set of frame variables) produces coefficient slices living in
the remaining variables. The slices are combined as a formal weighted
sum of powers; its order is computed without ever expanding the powers,
while expansion to an honest ideal is available behind a budget guard.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .ideals import Ideal
from .invariants import order_of_ideal
from .rings import (
    INFINITE_ORDER,
    MonomialOrder,
    Polynomial,
    RingContext,
    remap,
)

EXPANSION_BUDGET = 4000


def restricted_ring(context: RingContext, order: MonomialOrder,
                    drop: tuple[str, ...]) -> tuple[RingContext, MonomialOrder]:
    """The subring without the dropped variables, keeping the induced order."""
    dropped = set(drop)
    for name in drop:
        context.index(name)
    keep_old = [i for i in range(context.nvars) if context.variables[i] not in dropped]
    if not keep_old:
        raise DomainError("cannot drop every variable from the ring")
    small = context.without(dropped)
    renumber = {old: new for new, old in enumerate(keep_old)}
    perm = tuple(renumber[i] for i in order.permutation if i in renumber)
    return small, MonomialOrder(order.kind, perm)


def coefficients_in_variable(f: Polynomial, variable: str) -> dict[int, Polynomial]:
    """Slices of f by the exponent of one variable: f = sum_k a_k * v^k
    with every a_k free of v. Keys with zero slice are absent."""
    i = f.context.index(variable)
    slices: dict[int, dict[tuple[int, ...], Fraction]] = {}
    for e, c in f.items():
        k = e[i]
        stripped = tuple(0 if j == i else x for j, x in enumerate(e))
        slices.setdefault(k, {})[stripped] = c
    return {k: Polynomial(f.context, coeffs) for k, coeffs in sorted(slices.items())}


def coefficients_in_flag(f: Polynomial,
                         flag: tuple[str, ...]) -> dict[tuple[int, ...], Polynomial]:
    """Slices of f by the exponents of the flag variables; keys are the
    flag exponent tuples in flag order, values are free of the flag."""
    indices = [f.context.index(name) for name in flag]
    slices: dict[tuple[int, ...], dict[tuple[int, ...], Fraction]] = {}
    for e, c in f.items():
        beta = tuple(e[i] for i in indices)
        stripped = tuple(0 if j in indices else x for j, x in enumerate(e))
        slices.setdefault(beta, {})[stripped] = c
    return {b: Polynomial(f.context, coeffs) for b, coeffs in sorted(slices.items())}


@dataclass(frozen=True)
class WeightedComponent:
    ideal: Ideal
    exponent: int
    level: int


@dataclass(frozen=True)
class WeightedIdealSum:
    """A formal sum of ideal powers: sum over components of ideal^exponent.

    context is None exactly when no ambient variables remain (the ring of
    the components would be the field itself); the sum is then empty.
    """

    context: RingContext | None
    order: MonomialOrder | None
    components: tuple[WeightedComponent, ...]

    def is_empty(self) -> bool:
        return not self.components


def weighted_order(ws: WeightedIdealSum) -> int | float:
    """Order of the expanded ideal, computed componentwise: the order of
    a power scales linearly, and a sum takes the minimum."""
    best: int | float = INFINITE_ORDER
    for comp in ws.components:
        o = order_of_ideal(comp.ideal)
        if o == INFINITE_ORDER:
            continue
        best = min(best, comp.exponent * o)
    return best


def expand_weighted(ws: WeightedIdealSum, budget: int = EXPANSION_BUDGET) -> Ideal:
    """The honest generating set of the weighted sum. Guarded: the
    number of product generators must stay within budget."""
    if ws.context is None:
        raise DomainError("cannot expand a weighted sum over an empty ring")
    total = 0
    for comp in ws.components:
        g = len(comp.ideal.generators)
        if comp.exponent > budget:
            raise DomainError("weighted expansion exceeds the budget")
        count = math.comb(g + comp.exponent - 1, comp.exponent) if g else 0
        total += count
        if total > budget:
            raise DomainError("weighted expansion exceeds the budget")
    from .ideals import ideal_power, ideal_sum

    result = Ideal(ws.context, ws.order, ())
    for comp in ws.components:
        result = ideal_sum(result, ideal_power(comp.ideal, comp.exponent))
    return result


def coeff_ideal_villamayor(ideal: Ideal, variable: str,
                           order_bound: int | None = None) -> WeightedIdealSum:
    """Coefficient ideal with respect to one variable.

    Level k collects the k-th coefficient slices of the generators and
    enters with exponent b!/(b-k), for k below the reference order b
    (by default the order of the ideal itself).
    """
    ideal.context.index(variable)
    b = order_bound if order_bound is not None else order_of_ideal(ideal)
    if b == INFINITE_ORDER or b == 0:
        raise DomainError("coefficient ideals need a finite positive reference order")
    b = int(b)
    small, small_order = restricted_ring(ideal.context, ideal.order, (variable,))
    fact = math.factorial(b)
    per_level: dict[int, list[Polynomial]] = {}
    for g in ideal.generators:
        for k, a in coefficients_in_variable(g, variable).items():
            if k >= b:
                continue
            moved = remap(a, small)
            per_level.setdefault(k, []).append(moved)
    components = []
    for k in sorted(per_level):
        gens = []
        for a in per_level[k]:
            if a not in gens:
                gens.append(a)
        components.append(WeightedComponent(
            Ideal(small, small_order, tuple(gens)), fact // (b - k), k))
    return WeightedIdealSum(small, small_order, tuple(components))


def monomial_split(ideal: Ideal, variables: tuple[str, ...]) -> tuple[dict[str, int], Ideal]:
    """Split off the largest monomial factor in the given variables that
    divides every generator; returns the factor exponents and the rest."""
    if ideal.is_zero():
        return {name: 0 for name in variables}, ideal
    exponents: dict[str, int] = {}
    for name in variables:
        i = ideal.context.index(name)
        m = min(min(e[i] for e, _ in g.items()) for g in ideal.generators)
        exponents[name] = m
    indices = {ideal.context.index(name): k for name, k in exponents.items()}
    divided = []
    for g in ideal.generators:
        coeffs = {tuple(x - indices.get(j, 0) for j, x in enumerate(e)): c
                  for e, c in g.items()}
        divided.append(Polynomial(ideal.context, coeffs))
    return exponents, ideal.with_generators(divided)
