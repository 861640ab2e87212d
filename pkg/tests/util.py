"""Shared builders for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from desing.ideals import Ideal
from desing.parsing import parse_polynomial
from desing.rings import Polynomial, RingContext, make_context, order_for

SMALL_CONTEXTS = [make_context(names) for names in (["x"], ["x", "y"], ["x", "y", "z"])]


def ideal_like(model: Ideal, texts) -> Ideal:
    """An ideal in the same ring and order as the model, from generator text."""
    gens = [parse_polynomial(t, model.context) for t in texts]
    return Ideal.of(model.context, model.order, gens)


def random_polynomial(rng: random.Random, context: RingContext, max_degree: int,
                      max_terms: int, allow_constant: bool = True) -> Polynomial:
    """A random nonzero polynomial with small integer coefficients."""
    zero = (0,) * context.nvars
    while True:
        coeffs: dict[tuple[int, ...], Fraction] = {}
        for _ in range(rng.randint(1, max_terms)):
            exps = [0] * context.nvars
            for _ in range(rng.randint(0, max_degree)):
                exps[rng.randrange(context.nvars)] += 1
            coeffs[tuple(exps)] = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
        if not allow_constant:
            coeffs.pop(zero, None)
        if coeffs:
            return Polynomial(context, coeffs)


def random_ideal(rng: random.Random, context: RingContext, max_degree: int,
                 max_gens: int, order=None, allow_constant: bool = True) -> Ideal:
    if order is None:
        order = order_for(context)
    gens = [random_polynomial(rng, context, max_degree, 3, allow_constant)
            for _ in range(rng.randint(1, max_gens))]
    return Ideal.of(context, order, gens)


def random_monomial_ideal(rng: random.Random, context: RingContext,
                          max_degree: int, max_gens: int) -> Ideal:
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        exps = [0] * context.nvars
        for _ in range(rng.randint(1, max_degree)):
            exps[rng.randrange(context.nvars)] += 1
        gens.append(Polynomial.monomial(context, exps))
    return Ideal.of(context, order_for(context), gens)
