"""Resolution invariants: order of vanishing, derivative ideals and the
slice dimension sequence of the local quotient ring.

Everything is computed at a rational point by translating that point to
the origin first, then working with a local order. The slice sequence
counts, degree by degree, the monomials outside the leading ideal; its
values come from the numerator recursion for monomial ideals rather
than from enumerating monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .ideals import Ideal, leading_ideal, reduced_standard_basis, standard_basis
from .rings import (
    INFINITE_ORDER,
    MonomialOrder,
    Point,
    Polynomial,
    binomial,
    exp_degree,
)


def _localized(ideal: Ideal) -> Ideal:
    if ideal.order.is_local:
        return ideal
    return Ideal(ideal.context, MonomialOrder("negdegrevlex", ideal.order.permutation),
                 ideal.generators)


def _translated(ideal: Ideal, point: Point | None) -> Ideal:
    ideal = _localized(ideal)
    if point is None or point.is_origin():
        return ideal
    return ideal.map_gens(lambda g: g.translated(point))


def order_of_ideal(ideal: Ideal, point: Point | None = None) -> int | float:
    """Minimal order of vanishing of an element at the point."""
    local = _translated(ideal, point)
    # the minimum only depends on the leading ideal, so the raw standard
    # basis suffices and no tail reduction is needed
    elements = standard_basis(local).elements
    if not elements:
        return INFINITE_ORDER
    return min(g.order() for g in elements)


def delta_ideal(ideal: Ideal) -> Ideal:
    """Generators plus all first partial derivatives, re-presented by the
    reduced standard basis. Vanishing cuts out the locus of order >= 2."""
    local = _localized(ideal)
    gens = list(local.generators)
    for g in local.generators:
        for name in local.context.variables:
            d = g.derivative(name)
            if not d.is_zero() and d not in gens:
                gens.append(d)
    enlarged = local.with_generators(gens)
    return local.with_generators(reduced_standard_basis(enlarged))


def delta_iterate(ideal: Ideal, count: int) -> Ideal:
    """(count - 1)-fold derivative ideal; vanishing characterizes order >= count."""
    if count < 1:
        raise DomainError("iteration count must be at least 1")
    current = _localized(ideal)
    for _ in range(count - 1):
        current = delta_ideal(current)
    return current


def order_locus_ideal(ideal: Ideal, threshold: int) -> Ideal:
    """An ideal whose vanishing locus is the set of points of order >= threshold."""
    return delta_iterate(ideal, threshold)


# -- the slice dimension sequence ------------------------------------


def _minimalize(monomials: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    keep: list[tuple[int, ...]] = []
    for m in sorted(monomials, key=exp_degree):
        if not any(all(a <= b for a, b in zip(k, m)) for k in keep):
            keep.append(m)
    return keep


def _numerator(monomials: list[tuple[int, ...]]) -> dict[int, int]:
    """Numerator coefficients of the staircase generating series."""
    monomials = _minimalize(monomials)
    if not monomials:
        return {0: 1}
    if any(exp_degree(m) == 0 for m in monomials):
        return {}
    head, rest = monomials[-1], monomials[:-1]
    without = _numerator(rest)
    colon = [tuple(max(0, a - b) for a, b in zip(m, head)) for m in rest]
    quotient = _numerator(colon)
    out = dict(without)
    d = exp_degree(head)
    for j, c in quotient.items():
        out[j + d] = out.get(j + d, 0) - c
    return {j: c for j, c in out.items() if c != 0}


@dataclass(frozen=True)
class SliceSequence:
    """Dimensions of the graded slices of the local quotient, degree 0 up
    to max_degree; cumulative sums when cumulative is set."""

    values: tuple[int, ...]
    cumulative: bool

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.values)


def hs_sequence(ideal: Ideal, max_degree: int, point: Point | None = None,
                cumulative: bool = False) -> SliceSequence:
    if max_degree < 0:
        raise DomainError("max degree must be non-negative")
    local = _translated(ideal, point)
    elements = reduced_standard_basis(local)
    if elements and elements[0].order() == 0:
        raise DomainError("slice dimensions are undefined where the ideal is the unit ideal")
    lead = leading_ideal(local.with_generators(elements))
    monomials = [g.leading_exponents(local.order) for g in lead.generators]
    numerator = _numerator(monomials)
    n = local.context.nvars
    values = []
    for d in range(max_degree + 1):
        total = 0
        for j, c in numerator.items():
            total += c * binomial(n - 1 + d - j, n - 1)
        values.append(total)
    if cumulative:
        running = 0
        summed = []
        for v in values:
            running += v
            summed.append(running)
        values = summed
    return SliceSequence(tuple(values), cumulative)


def hs_compare(left: SliceSequence, right: SliceSequence) -> int:
    """Lexicographic comparison: -1, 0 or 1."""
    if left.cumulative != right.cumulative or len(left) != len(right):
        raise DomainError("slice sequences must share convention and length")
    if left.values < right.values:
        return -1
    if left.values > right.values:
        return 1
    return 0
