"""Ideals, normal forms and standard bases for local and global orders.

The engine is one Buchberger loop that works for any of the supported
orders. Under a local order the normal form is the ecart-driven weak
form (the reducer pool grows with intermediate results, which is what
makes termination work without a well-order); under a global order it
is ordinary division. Bases can be truncated by total degree of the
pair lcm and resumed later.

Quotient by a variable goes through an auxiliary elimination ring:
I : v is recovered from the intersection with the principal ideal (v),
computed with a block order that ranks the auxiliary variable first.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .errors import ContextMismatchError, DomainError, InternalError
from .rings import (
    MonomialOrder,
    Polynomial,
    RingContext,
    exp_degree,
    exp_div,
    exp_divides,
    exp_lcm,
    exp_mul,
    order_for,
    remap,
)

TAIL_REDUCTION_CAP = 1000
INTERREDUCTION_PASS_CAP = 100


@dataclass(frozen=True)
class Ideal:
    """Finitely many generators in a fixed ring with a fixed order.

    Under a local order the object stands for the ideal generated in the
    local ring at the origin, so equality and membership are localized.
    """

    context: RingContext
    order: MonomialOrder
    generators: tuple[Polynomial, ...]

    def __post_init__(self):
        if len(self.order.permutation) != self.context.nvars:
            raise ContextMismatchError("order does not fit the context")
        for g in self.generators:
            if g.context != self.context:
                raise ContextMismatchError("generator lives in a different ring")
        # dropping zero generators keeps hashing and comparison sane
        nonzero = tuple(g for g in self.generators if not g.is_zero())
        object.__setattr__(self, "generators", nonzero)

    @classmethod
    def of(cls, context: RingContext, order: MonomialOrder,
           generators: Iterable[Polynomial]) -> "Ideal":
        return cls(context, order, tuple(generators))

    def is_zero(self) -> bool:
        return not self.generators

    def with_generators(self, generators: Iterable[Polynomial]) -> "Ideal":
        return Ideal(self.context, self.order, tuple(generators))

    def map_gens(self, fn: Callable[[Polynomial], Polynomial]) -> "Ideal":
        return self.with_generators(fn(g) for g in self.generators)


# -- normal forms ----------------------------------------------------


def _pick_reducer(h: Polynomial, pool: Sequence[Polynomial],
                  order: MonomialOrder) -> Polynomial | None:
    target = h.leading_exponents(order)
    best = None
    best_key = None
    for idx, t in enumerate(pool):
        lt = t.leading_exponents(order)
        if not exp_divides(lt, target):
            continue
        key = (t.ecart(order), order.sort_key(lt), idx)
        if best_key is None or key < best_key:
            best, best_key = t, key
    return best


def _reduce_head_once(h: Polynomial, t: Polynomial, order: MonomialOrder) -> Polynomial:
    eh, et = h.leading_exponents(order), t.leading_exponents(order)
    q = h.leading_coefficient(order) / t.leading_coefficient(order)
    return h - t.mul_term(exp_div(eh, et), q)


def weak_normal_form(f: Polynomial, reducers: Sequence[Polynomial],
                     order: MonomialOrder,
                     max_steps: int | None = None) -> Polynomial:
    """Reduce the head of f until it is no longer divisible.

    For a local order this is the ecart-controlled form: whenever the
    chosen reducer has larger ecart than the current element, the
    element itself joins the reducer pool first. That keeps the loop
    finite even though the order is not a well-order.

    With max_steps set the loop gives up after that many reductions and
    returns the partial (nonzero) remainder; callers that only act on a
    zero result stay sound.
    """
    pool = [t for t in reducers if not t.is_zero()]
    h = f
    steps = 0
    while not h.is_zero():
        if max_steps is not None and steps >= max_steps:
            return h
        t = _pick_reducer(h, pool, order)
        if t is None:
            return h
        if order.is_local and t.ecart(order) > h.ecart(order):
            pool.append(h)
        h = _reduce_head_once(h, t, order)
        steps += 1
    return h


def division_normal_form(f: Polynomial, reducers: Sequence[Polynomial],
                         order: MonomialOrder) -> Polynomial:
    """Full division remainder for a global order: no term of the result
    is divisible by any reducer head."""
    pool = [t for t in reducers if not t.is_zero()]
    heads = [t.leading_exponents(order) for t in pool]
    remainder = Polynomial.zero(f.context)
    work = f
    while not work.is_zero():
        e = work.leading_exponents(order)
        reducer = None
        for t, lt in zip(pool, heads):
            if exp_divides(lt, e):
                reducer = t
                break
        if reducer is None:
            lead = Polynomial.monomial(f.context, e, work.coefficient(e))
            remainder = remainder + lead
            work = work - lead
        else:
            work = _reduce_head_once(work, reducer, order)
    return remainder


def normal_form(f: Polynomial, reducers: Sequence[Polynomial],
                order: MonomialOrder) -> Polynomial:
    if order.is_local:
        return weak_normal_form(f, reducers, order)
    return division_normal_form(f, reducers, order)


def spoly(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    ef, eg = f.leading_exponents(order), g.leading_exponents(order)
    lcm = exp_lcm(ef, eg)
    left = f.mul_term(exp_div(lcm, ef), 1 / f.leading_coefficient(order))
    right = g.mul_term(exp_div(lcm, eg), 1 / g.leading_coefficient(order))
    return left - right


# -- the Buchberger engine -------------------------------------------


@dataclass(frozen=True)
class StandardBasis:
    ideal: Ideal
    elements: tuple[Polynomial, ...]
    truncation_degree: int | None
    complete: bool

    def __iter__(self):
        return iter(self.elements)


def _run_buchberger(ideal: Ideal, truncation: int | None) -> StandardBasis:
    order = ideal.order
    basis = [g.monic(order) for g in ideal.generators]
    deduped: list[Polynomial] = []
    for g in basis:
        if g not in deduped:
            deduped.append(g)
    basis = deduped

    def pair_key(pair: tuple[int, int]):
        i, j = pair
        lcm = exp_lcm(basis[i].leading_exponents(order), basis[j].leading_exponents(order))
        return (exp_degree(lcm), order.sort_key(lcm), i, j)

    pending = {(i, j) for i, j in itertools.combinations(range(len(basis)), 2)}
    complete = True
    while pending:
        pair = min(pending, key=pair_key)
        i, j = pair
        ei = basis[i].leading_exponents(order)
        ej = basis[j].leading_exponents(order)
        lcm = exp_lcm(ei, ej)
        if truncation is not None and exp_degree(lcm) > truncation:
            complete = False
            break
        pending.discard(pair)
        if lcm == exp_mul(ei, ej):
            # coprime heads: the s-polynomial always reduces to zero
            continue
        h = weak_normal_form(spoly(basis[i], basis[j], order), basis, order)
        if h.is_zero():
            continue
        basis.append(h.monic(order))
        new = len(basis) - 1
        pending.update((k, new) for k in range(new))
    return StandardBasis(ideal, tuple(basis), truncation, complete)


@lru_cache(maxsize=None)
def _cached_basis(ideal: Ideal, truncation: int | None) -> StandardBasis:
    return _run_buchberger(ideal, truncation)


def standard_basis(ideal: Ideal, truncation_degree: int | None = None) -> StandardBasis:
    if truncation_degree is not None and truncation_degree < 0:
        raise DomainError("truncation degree must be non-negative")
    return _cached_basis(ideal, truncation_degree)


def resume_standard_basis(basis: StandardBasis, truncation_degree: int | None) -> StandardBasis:
    """Continue a truncated run up to a larger bound (or to completion).

    Pairs already processed reduce to zero against the carried basis, so
    continuing is equivalent to a fresh run at the new bound; the fresh
    run is what we execute, and the equivalence is what the tests pin.
    """
    if truncation_degree is not None:
        if basis.truncation_degree is not None and truncation_degree < basis.truncation_degree:
            raise DomainError("cannot resume below the previous truncation degree")
    return standard_basis(basis.ideal, truncation_degree)


# -- reduced bases ---------------------------------------------------


def _is_constant_exponent(e: tuple[int, ...]) -> bool:
    return all(x == 0 for x in e)


def _interreduce(elements: list[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    current = list(elements)
    for _ in range(INTERREDUCTION_PASS_CAP):
        changed = False
        ranked = sorted(current,
                        key=lambda g: (g.ecart(order), len(g)), reverse=True)
        for g in ranked:
            if g not in current:
                continue
            rest = [t for t in current if t is not g]
            h = weak_normal_form(g, rest, order)
            if h.is_zero():
                current = rest
                changed = True
            elif h != g:
                current = rest + [h.monic(order)]
                changed = True
        if not changed:
            return current
    return current


def _tail_reduce(g: Polynomial, others: Sequence[Polynomial],
                 order: MonomialOrder) -> Polynomial:
    """Clear tail terms of g that other heads divide, keeping g's head.

    Terms are visited largest first through a heap; a reduction step only
    disturbs strictly smaller terms, so a visited term is final.  Under a
    local order the rewriting can descend forever, so the number of steps
    is capped; a capped result is still a valid generator since only
    multiples of the other elements were subtracted.
    """
    if not others:
        return g
    head = g.leading_exponents(order)
    reducers = [(t.leading_exponents(order), t.leading_coefficient(order), t)
                for t in others]

    def neg_key(exps):
        return tuple(-k for k in order.sort_key(exps))

    coeffs = dict(g.items())
    heap = [(neg_key(e), e) for e in coeffs if e != head]
    heapq.heapify(heap)
    done: set[tuple[int, ...]] = set()
    steps = 0
    while heap and steps < TAIL_REDUCTION_CAP:
        _, e = heapq.heappop(heap)
        if e in done:
            continue
        c = coeffs.get(e)
        if not c:
            continue
        done.add(e)
        hit = next(((lt, lc, t) for lt, lc, t in reducers if exp_divides(lt, e)), None)
        if hit is None:
            continue
        lt, lc, t = hit
        steps += 1
        shift = exp_div(e, lt)
        q = c / lc
        for te, tc in t.items():
            ne = exp_mul(te, shift)
            fresh = ne not in coeffs
            nc = coeffs.get(ne, Fraction(0)) - q * tc
            if nc:
                coeffs[ne] = nc
                if fresh:
                    heapq.heappush(heap, (neg_key(ne), ne))
            else:
                coeffs.pop(ne, None)
    return Polynomial(g.context, coeffs)


def _reduced_elements(basis: StandardBasis) -> tuple[Polynomial, ...]:
    order = basis.ideal.order
    elements = list(basis.elements)
    if not elements:
        return ()
    if any(_is_constant_exponent(g.leading_exponents(order)) for g in elements):
        # a unit head makes the whole ideal trivial
        return (Polynomial.one(basis.ideal.context),)
    elements = _interreduce(elements, order)
    if any(_is_constant_exponent(g.leading_exponents(order)) for g in elements):
        return (Polynomial.one(basis.ideal.context),)
    # drop elements whose head another head divides (keep first occurrence)
    keep: list[Polynomial] = []
    for g in sorted(elements, key=lambda g: order.sort_key(g.leading_exponents(order))):
        lg = g.leading_exponents(order)
        if any(exp_divides(k.leading_exponents(order), lg) for k in keep):
            continue
        keep.append(g)
    reduced = []
    for g in keep:
        others = [t for t in keep if t is not g]
        reduced.append(_tail_reduce(g, others, order).monic(order))
    reduced.sort(key=lambda g: order.sort_key(g.leading_exponents(order)), reverse=True)
    return tuple(reduced)


@lru_cache(maxsize=None)
def _cached_reduced(ideal: Ideal) -> tuple[Polynomial, ...]:
    return _reduced_elements(standard_basis(ideal))


def reduced_standard_basis(ideal: Ideal) -> tuple[Polynomial, ...]:
    """Monic basis, heads pairwise non-divisible, tails normal with
    respect to the other elements, sorted by descending head."""
    return _cached_reduced(ideal)


def leading_ideal(ideal: Ideal) -> Ideal:
    order = ideal.order
    heads = []
    for g in standard_basis(ideal).elements:
        e = g.leading_exponents(order)
        if not any(exp_divides(k, e) for k in heads):
            heads = [k for k in heads if not exp_divides(e, k)] + [e]
    heads.sort(key=order.sort_key, reverse=True)
    return ideal.with_generators(
        Polynomial.monomial(ideal.context, e) for e in heads)


# -- membership and comparison ---------------------------------------


def ideal_member(f: Polynomial, ideal: Ideal) -> bool:
    if f.context != ideal.context:
        raise ContextMismatchError("polynomial lives in a different ring")
    if f.is_zero():
        return True
    basis = standard_basis(ideal)
    return weak_normal_form(f, basis.elements, ideal.order).is_zero()


def is_unit_ideal(ideal: Ideal) -> bool:
    return ideal_member(Polynomial.one(ideal.context), ideal)


def ideal_equals(left: Ideal, right: Ideal) -> bool:
    """Equality of the generated ideals; localized when the order is local."""
    if left.context != right.context or left.order != right.order:
        raise ContextMismatchError("ideals must share ring and order")
    if left.generators == right.generators:
        return True
    return (all(ideal_member(g, right) for g in left.generators)
            and all(ideal_member(g, left) for g in right.generators))


def ideal_contains(outer: Ideal, inner: Ideal) -> bool:
    return all(ideal_member(g, outer) for g in inner.generators)


# -- sums, products, powers ------------------------------------------


def ideal_sum(left: Ideal, right: Ideal) -> Ideal:
    if left.context != right.context or left.order != right.order:
        raise ContextMismatchError("ideals must share ring and order")
    gens = list(left.generators)
    for g in right.generators:
        if g not in gens:
            gens.append(g)
    return left.with_generators(gens)


def ideal_product(left: Ideal, right: Ideal) -> Ideal:
    if left.context != right.context or left.order != right.order:
        raise ContextMismatchError("ideals must share ring and order")
    gens: list[Polynomial] = []
    for a in left.generators:
        for b in right.generators:
            p = a * b
            if p not in gens:
                gens.append(p)
    return left.with_generators(gens)


def ideal_power(ideal: Ideal, exponent: int) -> Ideal:
    if exponent < 0:
        raise DomainError("ideal powers need a non-negative exponent")
    result = ideal.with_generators([Polynomial.one(ideal.context)])
    for _ in range(exponent):
        result = ideal_product(result, ideal)
    return result


def ideal_combine(operation: str, left: Ideal, right: Ideal | int) -> Ideal:
    if operation == "sum":
        return ideal_sum(left, right)
    if operation == "product":
        return ideal_product(left, right)
    if operation == "power":
        return ideal_power(left, right)
    raise DomainError(f"unknown ideal operation {operation!r}")


# -- quotient and saturation by a variable ---------------------------


@dataclass(frozen=True)
class _EliminationOrder:
    """Block order on an extended ring: the auxiliary variable first,
    then a global tie-break. Used only inside quotient computations."""

    aux_index: int
    tie_break: MonomialOrder

    @property
    def is_local(self) -> bool:
        return False

    def sort_key(self, exponents: tuple[int, ...]):
        return (exponents[self.aux_index], self.tie_break.sort_key(exponents))


def _fresh_aux_name(context: RingContext) -> str:
    name = "_t"
    while name in context.variables:
        name += "_"
    return name


def quotient_by_variable(ideal: Ideal, variable: str) -> Ideal:
    """The colon ideal (I : v), via I : v = (I meet (v)) / v."""
    ideal.context.index(variable)
    if ideal.is_zero():
        return ideal
    aux = _fresh_aux_name(ideal.context)
    big = RingContext((aux,) + ideal.context.variables)
    elim = _EliminationOrder(0, order_for(big, "degrevlex"))
    t = Polynomial.variable(big, aux)
    one = Polynomial.one(big)
    v_big = Polynomial.variable(big, variable)
    gens = [t * remap(g, big) for g in ideal.generators]
    gens.append((one - t) * v_big)
    elements = _buchberger_with_order(tuple(gens), big, elim)
    vi = big.index(variable)
    out: list[Polynomial] = []
    for g in elements:
        if any(e[0] > 0 for e, _ in g.items()):
            continue
        divided = {tuple(x - (1 if i == vi else 0) for i, x in enumerate(e)): c
                   for e, c in g.items()}
        if any(x < 0 for e in divided for x in e):
            raise InternalError("intersection element not divisible by the variable")
        out.append(remap(Polynomial(big, divided), ideal.context).monic(ideal.order))
    deduped: list[Polynomial] = []
    for g in out:
        if g not in deduped:
            deduped.append(g)
    deduped.sort(key=lambda g: ideal.order.sort_key(g.leading_exponents(ideal.order)),
                 reverse=True)
    return ideal.with_generators(deduped)


_DROP_STEP_CAP = 200


def _drop_absorbed(ideal: Ideal) -> Ideal:
    """Drop generators the others provably absorb.  Head reduction to zero
    certifies membership, so this never changes the ideal.  Under a local
    order a unit generator stays out of the reducer pool, else it would
    absorb every other generator and flatten the presentation to the unit.
    The step cap keeps pathological reductions from stalling; hitting it
    just keeps the generator."""
    survivors = list(ideal.generators)
    for g in list(survivors):
        pool = [h for h in survivors
                if h is not g and not (ideal.order.is_local and h.order() == 0)]
        if pool and weak_normal_form(g, pool, ideal.order,
                                     max_steps=_DROP_STEP_CAP).is_zero():
            survivors.remove(g)
    if len(survivors) == len(ideal.generators):
        return ideal
    return ideal.with_generators(survivors)


@lru_cache(maxsize=None)
def _buchberger_with_order(generators: tuple[Polynomial, ...], context: RingContext,
                           order) -> tuple[Polynomial, ...]:
    basis = [g.monic(order) for g in generators if not g.is_zero()]

    def pair_key(pair: tuple[int, int]):
        i, j = pair
        lcm = exp_lcm(basis[i].leading_exponents(order), basis[j].leading_exponents(order))
        return (exp_degree(lcm), order.sort_key(lcm), i, j)

    pending = {(i, j) for i, j in itertools.combinations(range(len(basis)), 2)}
    while pending:
        pair = min(pending, key=pair_key)
        pending.discard(pair)
        i, j = pair
        ei = basis[i].leading_exponents(order)
        ej = basis[j].leading_exponents(order)
        if exp_lcm(ei, ej) == exp_mul(ei, ej):
            continue
        h = division_normal_form(spoly(basis[i], basis[j], order), basis, order)
        if h.is_zero():
            continue
        basis.append(h.monic(order))
        new = len(basis) - 1
        pending.update((k, new) for k in range(new))
    return tuple(basis)


def saturate_by_variable(ideal: Ideal, variable: str) -> tuple[Ideal, int]:
    """Iterated quotients until stable; the count includes the final
    quotient that witnesses stability."""
    current = ideal
    steps = 0
    while True:
        nxt = quotient_by_variable(current, variable)
        steps += 1
        if ideal_equals(nxt, current):
            return _drop_absorbed(current), steps
        current = nxt
