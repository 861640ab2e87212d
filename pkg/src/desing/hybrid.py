"""The staged construction: frames of maximal contact, degreewise
marking, the modified coefficient ideal and the resulting invariant.

The construction walks the generators degree by degree. At each degree
it closes the pair queue up to that degree, extends the frame of
contact variables whenever a leading monomial escapes it (straightening
the new contact elements into coordinates), marks the generators that
now lead inside the frame, and pushes everything of the current degree
up by one through multiplication with the frame variables. What is
left when every input generator has been marked is the working ideal
whose order, together with the weighted order of the modified
coefficient ideal over the complement of the frame, forms the
invariant.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .coeff import (
    WeightedComponent,
    WeightedIdealSum,
    coeff_ideal_villamayor,
    coefficients_in_flag,
    restricted_ring,
    weighted_order,
)
from .errors import DomainError, InternalError
from .blowup import Center, chart_variables, strict_transform, weak_transform
from .ideals import (
    Ideal,
    ideal_equals,
    is_unit_ideal,
    spoly,
    weak_normal_form,
)
from .invariants import hs_sequence, order_of_ideal
from .rings import (
    INFINITE_ORDER,
    MonomialOrder,
    Polynomial,
    RingContext,
    exp_degree,
    exp_lcm,
    remap,
)

STRAIGHTEN_BOUND = 24
STAGE_CAP = 80


# -- frames of maximal contact ---------------------------------------


@dataclass(frozen=True)
class FrameExtension:
    """Contact variables with their straightening substitutions."""

    pivots: tuple[str, ...]
    elements: tuple[Polynomial, ...]
    substitutions: tuple[dict, ...]


def apply_substitutions(poly: Polynomial, substitutions: tuple[dict, ...],
                        bound: int | None = None) -> Polynomial:
    for sigma in substitutions:
        poly = poly.substitute(sigma, bound)
    return poly


def compose_substitutions(substitutions: tuple[dict, ...],
                          bound: int | None = None) -> dict:
    """Fold a chain of substitutions into one simultaneous map.

    Earlier images are pushed through each later map; a variable keeps
    its first image. Applying the result once agrees with applying the
    chain left to right, at a single pass over the target."""
    composed: dict = {}
    for sigma in substitutions:
        if composed:
            composed = {n: img.substitute(sigma, bound)
                        for n, img in composed.items()}
        for n, img in sigma.items():
            composed.setdefault(n, img)
    return composed


def _linear_coefficient(poly: Polynomial, index: int):
    unit = tuple(1 if j == index else 0 for j in range(poly.context.nvars))
    return poly.coefficient(unit)


def _eliminate_rows(rows: list[Polynomial], context: RingContext,
                    order: MonomialOrder) -> list[tuple[str, Polynomial]]:
    """Gaussian elimination on the linear parts, full elements carried
    along; pivot columns are taken largest variable first."""
    work = [h for h in rows]
    pivots: list[tuple[str, Polynomial]] = []
    for var_index in order.permutation:
        name = context.variables[var_index]
        found = None
        for r, h in enumerate(work):
            if _linear_coefficient(h, var_index) != 0:
                found = r
                break
        if found is None:
            continue
        h = work.pop(found)
        h = h.scale(1 / _linear_coefficient(h, var_index))

        def cleared(p: Polynomial) -> Polynomial:
            c = _linear_coefficient(p, var_index)
            return p if c == 0 else p - h.scale(c)

        work = [cleared(w) for w in work]
        pivots = [(n, cleared(p)) for n, p in pivots]
        pivots.append((name, h))
    return pivots


def _straighten(pivots: list[tuple[str, Polynomial]], context: RingContext,
                bound: int) -> tuple[dict, ...]:
    """Substitutions sending each contact element to its pivot variable.

    Each round subtracts the current non-pivot remainder; when the
    remainder involves the pivot itself the fix is only partial, but
    every round pushes the leftover order up by at least one, so the
    leftover is negligible past the bound.  The working copy is cut off
    at the bound throughout (terms past it only ever produce terms past
    it) and the rounds for one pivot are composed into a single
    substitution, so callers apply one map per pivot.
    """
    substitutions: list[dict] = []
    for name, element in pivots:
        index = context.index(name)
        var = Polynomial.variable(context, name)
        h = apply_substitutions(element, tuple(substitutions), bound)
        rounds: list[dict] = []
        for _ in range(bound):
            c = _linear_coefficient(h, index)
            if c == 0:
                raise InternalError("contact element lost its pivot")
            rest = h - var.scale(c)
            if rest.is_zero() or rest.order() > bound:
                break
            sigma = {name: (var - rest).scale(1 / c)}
            rounds.append(sigma)
            h = h.substitute(sigma, bound)
        if rounds:
            image = var
            for sigma in rounds:
                image = image.substitute(sigma, bound)
            substitutions.append({name: image})
    return tuple(substitutions)


def _contact_rows(ideal: Ideal, degree: int) -> list[Polynomial]:
    """Order-one elements of the (degree-1)-fold derivative ideal.

    Works on raw generators: the linear span of an ideal modulo squares
    of the maximal ideal is already spanned by the linear parts of any
    generating set, so no basis computation is needed. Generators whose
    order cannot drop to one within the remaining differentiation
    levels are pruned to keep the fan-out down.
    """
    order = ideal.order
    gens = [g.monic(order) for g in ideal.generators if not g.is_zero()]
    for level in range(degree - 1):
        remaining = degree - 1 - level
        gens = [g for g in gens if g.order() <= 1 + remaining]
        grown: dict[Polynomial, None] = {}
        for g in gens:
            grown.setdefault(g)
            for name in ideal.context.variables:
                d = g.derivative(name)
                if not d.is_zero():
                    grown.setdefault(d.monic(order))
        gens = list(grown)
    return [g for g in gens if g.order() == 1]


def maximal_contact_frame(ideal: Ideal, degree: int,
                          existing: tuple[str, ...] = (),
                          bound: int = STRAIGHTEN_BOUND) -> FrameExtension:
    """Contact variables of the ideal at the given degree: order-one
    elements of the (degree-1)-fold derivative ideal, straightened."""
    elements = _contact_rows(ideal, degree)
    if not elements:
        raise InternalError("no contact elements at this degree")
    pivots = _eliminate_rows(elements, ideal.context, ideal.order)
    names = [n for n, _ in pivots]
    missing = [n for n in existing if n not in names]
    if missing:
        raise InternalError(f"existing frame variables {missing} lost their pivots")
    ordered = list(existing) + [n for n in names if n not in existing]
    by_name = dict(pivots)
    ordered_pivots = [(n, by_name[n]) for n in ordered]
    subs = _straighten(ordered_pivots, ideal.context, bound)
    return FrameExtension(tuple(ordered), tuple(by_name[n] for n in ordered), subs)


# -- the staged construction -----------------------------------------


@dataclass(frozen=True)
class MarkedGenerator:
    poly: Polynomial
    degree: int
    frame_size: int


@dataclass(frozen=True)
class StagedBuild:
    ideal: Ideal
    flag: tuple[str, ...]
    marked: tuple[MarkedGenerator, ...]
    jk: Ideal
    final_degree: int

    @property
    def frame_size(self) -> int:
        return len(self.flag)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(m.degree for m in self.marked)


_ORIGINAL = "original"
_DERIVED = "derived"
_LIFTED = "lifted"


@lru_cache(maxsize=None)
def staged_build(ideal: Ideal, stage_cap: int = STAGE_CAP,
                 bound: int = STRAIGHTEN_BOUND) -> StagedBuild:
    """Run the staged presentation loop on a nonzero proper ideal.

    Stages walk up from the minimal generator order. At each degree the
    pair queue is closed up to that degree, the contact frame grows
    while some current-degree head escapes it, surviving current-degree
    generators are marked, and everything at the degree is pushed up
    through the frame. Straightening maps and their application to the
    generators are cut off past the bound; the quantities read off the
    result sit at orders far under it, so the cutoff never reaches them.
    """
    order = ideal.order
    if not order.is_local:
        raise DomainError("the staged construction needs a local order")
    if ideal.is_zero():
        raise DomainError("the staged construction needs a nonzero ideal")
    if order_of_ideal(ideal) == 0:
        raise DomainError("the staged construction needs a proper ideal")

    working: list[tuple[Polynomial, str, int | None]] = [
        (g, _ORIGINAL, i) for i, g in enumerate(ideal.generators)]
    pending = {i for i in range(len(ideal.generators))}
    flag: tuple[str, ...] = ()
    marked: list[MarkedGenerator] = []
    flag_indices: set[int] = set()

    def head_in_flag(g: Polynomial) -> bool:
        lead = g.leading_exponents(order)
        return all(x == 0 or i in flag_indices for i, x in enumerate(lead))

    d = min(int(g.order()) for g in ideal.generators)
    first_stage = d
    while True:
        if d - first_stage > stage_cap:
            raise InternalError("staged construction exceeded the stage cap")
        # (a) close the pair queue up to this degree, (b) extend the frame
        # while some current-degree head escapes it
        while True:
            processed: set[tuple[int, int]] = set()
            while True:
                polys = [g for g, _, _ in working]
                candidate = None
                candidate_key = None
                for i, j in itertools.combinations(range(len(polys)), 2):
                    if (i, j) in processed:
                        continue
                    lcm = exp_lcm(polys[i].leading_exponents(order),
                                  polys[j].leading_exponents(order))
                    if exp_degree(lcm) > d:
                        continue
                    key = (exp_degree(lcm), order.sort_key(lcm), i, j)
                    if candidate_key is None or key < candidate_key:
                        candidate, candidate_key = (i, j), key
                if candidate is None:
                    break
                processed.add(candidate)
                i, j = candidate
                h = weak_normal_form(spoly(polys[i], polys[j], order), polys, order)
                if not h.is_zero():
                    working.append((h.monic(order), _DERIVED, None))
            escaped = any(kind != _LIFTED and g.order() == d and not head_in_flag(g)
                          for g, kind, _ in working)
            if not escaped:
                break
            current = Ideal(ideal.context, order, tuple(g for g, _, _ in working))
            frame = maximal_contact_frame(current, d, existing=flag, bound=bound)
            if len(frame.pivots) <= len(flag):
                raise InternalError("frame extension did not grow")
            flag = frame.pivots
            flag_indices = {ideal.context.index(n) for n in flag}
            if frame.substitutions:
                sigma = compose_substitutions(frame.substitutions, bound)
                working = [(g.substitute(sigma, bound), kind, src)
                           for g, kind, src in working]
                marked = [MarkedGenerator(m.poly.substitute(sigma, bound),
                                          m.degree, m.frame_size) for m in marked]
        # (c) mark the generators that now lead inside the frame
        candidates = [(g, kind, src) for g, kind, src in working
                      if kind != _LIFTED and g.order() == d]
        candidates.sort(key=lambda t: order.sort_key(t[0].leading_exponents(order)),
                        reverse=True)
        for g, kind, src in candidates:
            others = [p for p, _, _ in working if p is not g]
            if weak_normal_form(g, others, order).is_zero():
                working = [(p, k, s) for p, k, s in working if p is not g]
                if kind == _ORIGINAL:
                    pending.discard(src)
                continue
            if not head_in_flag(g):
                raise InternalError("marking a head outside the frame")
            marked.append(MarkedGenerator(g, d, len(flag)))
            if kind == _ORIGINAL:
                pending.discard(src)
            working = [(p, k, s) if p is not g else (p, _LIFTED, None)
                       for p, k, s in working]
        # (d) stop once every input generator is accounted for
        if not pending:
            jk = Ideal(ideal.context, order, tuple(g for g, _, _ in working))
            return StagedBuild(ideal, flag, tuple(marked), jk, d)
        # (e) push the current degree up through the frame
        lifted: list[tuple[Polynomial, str, int | None]] = []
        for g, kind, src in working:
            if g.order() == d:
                for name in flag:
                    lifted.append((Polynomial.variable(ideal.context, name) * g,
                                   _LIFTED, None))
            else:
                lifted.append((g, kind, src))
        working = lifted
        d += 1


# -- the modified coefficient ideal ----------------------------------


def modified_coeff_ideal(staged: StagedBuild) -> WeightedIdealSum:
    """Coefficient slices of the marked generators over the frame.

    A slice of a generator marked at degree d_i enters every level from
    its threshold up to the final degree; pure frame slices fall past
    the last level and disappear. With nothing outside the frame the
    sum is the distinguished empty one."""
    context = staged.ideal.context
    flag = staged.flag
    if len(flag) == context.nvars:
        return WeightedIdealSum(None, None, ())
    small, small_order = restricted_ring(context, staged.ideal.order, flag)
    dk = staged.final_degree
    fact = math.factorial(dk)
    levels: dict[int, list[Polynomial]] = {}
    for m in staged.marked:
        for beta, slice_poly in coefficients_in_flag(m.poly, flag).items():
            low = max(0, sum(beta) + dk - m.degree)
            if low >= dk:
                continue
            moved = remap(slice_poly, small)
            for j in range(low, dk):
                bucket = levels.setdefault(j, [])
                if moved not in bucket:
                    bucket.append(moved)
    components = tuple(
        WeightedComponent(Ideal(small, small_order, tuple(levels[j])),
                          fact // (dk - j), j)
        for j in sorted(levels))
    return WeightedIdealSum(small, small_order, components)


def condition_reference_ideal(staged: StagedBuild) -> Ideal:
    """Reference presentation of the working ideal directly from the
    marked data: each generator multiplied by the frame monomials of
    complementary degree whose prefix weights clear the later marking
    thresholds."""
    context = staged.ideal.context
    flag = staged.flag
    degrees = staged.degrees
    dk = staged.final_degree
    gens: list[Polynomial] = []
    for m in staged.marked:
        total = dk - m.degree
        for alpha in _compositions(total, len(flag)):
            ok = True
            for s in range(len(staged.marked) - 1):
                prefix = sum(alpha[:staged.marked[s].frame_size])
                if prefix < max(0, degrees[s + 1] - m.degree):
                    ok = False
                    break
            if ok:
                mono = Polynomial.one(context)
                for name, e in zip(flag, alpha):
                    if e:
                        mono = mono * Polynomial.variable(context, name) ** e
                gens.append(mono * m.poly)
    return staged.ideal.with_generators(gens)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


# -- the invariant and center suggestion -----------------------------


@dataclass(frozen=True)
class InvariantEntry:
    order: int | float
    ambient: int


@dataclass(frozen=True)
class HybridInvariant:
    staged: StagedBuild
    entries: tuple[InvariantEntry, ...]
    descent_variables: tuple[str, ...]


def hybrid_invariant(ideal: Ideal, max_depth: int = 8,
                     bound: int = STRAIGHTEN_BOUND) -> HybridInvariant:
    staged = staged_build(ideal, bound=bound)
    n = ideal.context.nvars
    entries = [InvariantEntry(order_of_ideal(staged.jk), n)]
    ws = modified_coeff_ideal(staged)
    wo = weighted_order(ws)
    entries.append(InvariantEntry(wo, 0 if ws.context is None else ws.context.nvars))
    descent: list[str] = []
    depth = 0
    while ws.context is not None and wo != 0 and wo != INFINITE_ORDER and depth < max_depth:
        component = _minimum_component(ws, wo)
        inner = component.ideal
        if len(inner.generators) == 1 and len(inner.generators[0]) == 1:
            for name in sorted(inner.generators[0].support_variables(),
                               key=inner.context.variables.index):
                if name not in descent:
                    descent.append(name)
        b = order_of_ideal(inner)
        frame = maximal_contact_frame(inner, int(b), bound=bound)
        pivot = frame.pivots[0]
        if pivot not in descent:
            descent.append(pivot)
        straightened = inner.map_gens(
            lambda g: apply_substitutions(g, frame.substitutions, bound))
        if inner.context.nvars == 1:
            entries.append(InvariantEntry(INFINITE_ORDER, 0))
            break
        ws = coeff_ideal_villamayor(straightened, pivot, int(b))
        wo = weighted_order(ws)
        entries.append(InvariantEntry(wo, ws.context.nvars))
        depth += 1
    return HybridInvariant(staged, tuple(entries), tuple(descent))


def _minimum_component(ws: WeightedIdealSum, target) -> WeightedComponent:
    for comp in ws.components:
        o = order_of_ideal(comp.ideal)
        if o != INFINITE_ORDER and comp.exponent * o == target:
            return comp
    raise InternalError("no component achieves the weighted order")


def suggest_center(ideal: Ideal) -> tuple[str, ...]:
    """Variables of the suggested blowup center; empty when the order is
    already at most one everywhere relevant."""
    if ideal.is_zero():
        raise DomainError("the zero ideal suggests no center")
    o = order_of_ideal(ideal)
    if o == 0:
        raise DomainError("the unit ideal suggests no center")
    if o <= 1:
        return ()
    invariant = hybrid_invariant(ideal)
    names = set(invariant.staged.flag) | set(invariant.descent_variables)
    return tuple(v for v in ideal.context.variables if v in names)


# -- the equivalence check across one blowup -------------------------


@dataclass(frozen=True)
class ChartCheck:
    chart: str
    trivial: bool
    hs_drop: bool | None
    order_drop: bool
    equivalent: bool
    rebuild_match: bool | None


def lemma_equivalence_check(ideal: Ideal, center: Center) -> tuple[ChartCheck, ...]:
    """Per chart: the slice sequence of the strict transform drops at the
    chart origin exactly when the working ideal's weak transform has
    order below the final degree; where no drop happens the weak
    transform and the freshly rebuilt working ideal must agree."""
    staged = staged_build(ideal)
    if not set(staged.flag) <= set(center.variables):
        raise DomainError("the center must contain the frame variables")
    depth = 2 * int(order_of_ideal(ideal))
    base = hs_sequence(ideal, depth)
    results = []
    for chart in chart_variables(ideal.context, center):
        strict = strict_transform(ideal, center, chart).ideal
        weak_jk = weak_transform(staged.jk, center, chart).ideal
        order_drop = order_of_ideal(weak_jk) < staged.final_degree
        if is_unit_ideal(strict):
            results.append(ChartCheck(chart, True, None, order_drop,
                                      order_drop, None))
            continue
        drop = hs_sequence(strict, depth).values < base.values
        equivalent = drop == order_drop
        rebuild = None
        if not drop:
            rebuilt = staged_build(strict)
            rebuild = ideal_equals(weak_jk, rebuilt.jk)
        results.append(ChartCheck(chart, False, drop, order_drop, equivalent, rebuild))
    return tuple(results)
