"""Blowups of coordinate subspace centers, chart by chart.

A center is a set of variables; each center variable carries one
affine chart, where that variable becomes the exceptional factor and
the other center variables pick it up as a multiplier. The three
transforms of an ideal differ in how much of the exceptional factor
is divided out: nothing (total), a uniform controlled power (weak),
or everything (strict, by saturation).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .ideals import Ideal, reduced_standard_basis, saturate_by_variable
from .rings import Polynomial


@dataclass(frozen=True)
class Center:
    """A coordinate subspace center: either at least two variables or
    the whole variable set (the origin)."""

    variables: tuple[str, ...]

    @classmethod
    def of(cls, *names: str) -> "Center":
        return cls(tuple(names))

    def validate(self, context) -> None:
        if len(set(self.variables)) != len(self.variables):
            raise DomainError("center variables must be distinct")
        for name in self.variables:
            context.index(name)
        if len(self.variables) < 2 and len(self.variables) != context.nvars:
            raise DomainError(
                "a center needs at least two variables or the full variable set")


def chart_substitution(context, center: Center, chart: str) -> dict[str, Polynomial]:
    """Variable images in the chart of one center variable."""
    if chart not in center.variables:
        raise DomainError(f"{chart!r} is not a center variable")
    exceptional = Polynomial.variable(context, chart)
    images = {}
    for name in center.variables:
        if name != chart:
            images[name] = exceptional * Polynomial.variable(context, name)
    return images


def chart_variables(context, center: Center) -> tuple[str, ...]:
    """Center variables in ambient order; one chart each."""
    return tuple(v for v in context.variables if v in set(center.variables))


def ranked_charts(ideal: Ideal, center: Center) -> tuple[str, ...]:
    """Center variables ranked the way the monomial order ranks them,
    largest first; the usual listing order for chart reports."""
    members = set(center.variables)
    names = (ideal.context.variables[i] for i in ideal.order.permutation)
    return tuple(name for name in names if name in members)


@dataclass(frozen=True)
class TransformResult:
    kind: str
    chart: str
    ideal: Ideal
    controlled_exponent: int | None = None
    saturation_steps: int | None = None


def total_transform(ideal: Ideal, center: Center, chart: str) -> TransformResult:
    center.validate(ideal.context)
    images = chart_substitution(ideal.context, center, chart)
    moved = ideal.map_gens(lambda g: g.substitute(images))
    return TransformResult("total", chart, moved)


def _exceptional_valuation(g: Polynomial, index: int) -> int:
    return min(e[index] for e, _ in g.items())


def _divide_exceptional(g: Polynomial, index: int, power: int) -> Polynomial:
    if power == 0:
        return g
    coeffs = {tuple(x - (power if j == index else 0) for j, x in enumerate(e)): c
              for e, c in g.items()}
    return Polynomial(g.context, coeffs)


def weak_transform(ideal: Ideal, center: Center, chart: str) -> TransformResult:
    """Divide the total transform by the largest uniform power of the
    exceptional variable that can be undone by multiplying back.

    That power is the least exceptional valuation over the generators:
    dividing each generator by it multiplies back to the total transform
    exactly, and any combination cleared by a higher colon would divide
    a generator below valuation zero.
    """
    total = total_transform(ideal, center, chart).ideal
    if total.is_zero():
        return TransformResult("weak", chart, total, controlled_exponent=0)
    index = total.context.index(chart)
    bound = min(_exceptional_valuation(g, index) for g in total.generators)
    divided = total.map_gens(lambda g: _divide_exceptional(g, index, bound))
    return TransformResult("weak", chart, divided, controlled_exponent=bound)


def strict_transform(ideal: Ideal, center: Center, chart: str) -> TransformResult:
    total = total_transform(ideal, center, chart).ideal
    saturated, steps = saturate_by_variable(total, chart)
    return TransformResult("strict", chart, saturated, saturation_steps=steps)


def strict_transform_via_sb(ideal: Ideal, center: Center, chart: str) -> TransformResult:
    """Strict transform taken element by element on the reduced basis:
    each moved element individually loses its full exceptional factor."""
    center.validate(ideal.context)
    images = chart_substitution(ideal.context, center, chart)
    index = ideal.context.index(chart)
    out = []
    for g in reduced_standard_basis(ideal):
        moved = g.substitute(images)
        if moved.is_zero():
            continue
        val = _exceptional_valuation(moved, index)
        out.append(_divide_exceptional(moved, index, val))
    return TransformResult("strict", chart, ideal.with_generators(out))


def transform(ideal: Ideal, center: Center, chart: str, kind: str,
              via_sb: bool = False) -> TransformResult:
    if kind == "total":
        return total_transform(ideal, center, chart)
    if kind == "weak":
        return weak_transform(ideal, center, chart)
    if kind == "strict":
        if via_sb:
            return strict_transform_via_sb(ideal, center, chart)
        return strict_transform(ideal, center, chart)
    raise DomainError(f"unknown transform kind {kind!r}")
