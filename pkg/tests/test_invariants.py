import itertools
import random
from fractions import Fraction

import pytest

from desing.errors import DomainError
from desing.ideals import Ideal, ideal_contains, ideal_equals, is_unit_ideal
from desing.invariants import (
    INFINITE_ORDER,
    delta_ideal,
    delta_iterate,
    hs_compare,
    hs_sequence,
    order_locus_ideal,
    order_of_ideal,
)
from desing.parsing import parse_polynomial
from desing.rings import Point, Polynomial, make_context, order_for
from util import (
    SMALL_CONTEXTS,
    ideal_like,
    random_monomial_ideal,
    random_polynomial,
)


def test_order_fixtures(ex61, ex62):
    assert order_of_ideal(ex61) == 2
    assert order_of_ideal(ex62) == 5


def test_order_edge_cases():
    ctx = make_context(["x", "y"])
    order = order_for(ctx)
    zero = Ideal.of(ctx, order, [])
    assert order_of_ideal(zero) == INFINITE_ORDER
    unit = Ideal.of(ctx, order, [parse_polynomial("1 + x", ctx)])
    assert order_of_ideal(unit) == 0


def test_order_at_point():
    ctx = make_context(["x", "y"])
    ideal = Ideal.of(ctx, order_for(ctx),
                     [parse_polynomial("y^2 - x^3", ctx)])
    assert order_of_ideal(ideal) == 2
    # smooth point of the cusp curve
    assert order_of_ideal(ideal, Point.of(1, 1)) == 1
    # point off the curve
    assert order_of_ideal(ideal, Point.of(1, 7)) == 0


def test_order_multiplicative_random():
    rng = random.Random(301)
    for _ in range(500):
        ctx = SMALL_CONTEXTS[rng.randrange(3)]
        f = random_polynomial(rng, ctx, 4, 3)
        g = random_polynomial(rng, ctx, 4, 3)
        assert (f * g).order() == f.order() + g.order()


def test_delta_fixture(ex61):
    expected = ideal_like(
        ex61, ["z", "x^2*y^3", "x^3*y^2", "w^4", "x^4", "v^3*y", "v^2*y^2"])
    assert ideal_equals(delta_ideal(ex61), expected)


def test_delta_contains_and_drops_order(ex61, ex62):
    for ideal in (ex61, ex62):
        d = delta_ideal(ideal)
        assert ideal_contains(d, ideal)
        assert order_of_ideal(d) == order_of_ideal(ideal) - 1


def test_delta_of_smooth_hypersurface_is_unit():
    ctx = make_context(["x", "y", "z"])
    ideal = Ideal.of(ctx, order_for(ctx),
                     [parse_polynomial("z + x^2 + y^3", ctx)])
    assert is_unit_ideal(delta_ideal(ideal))


def test_delta_iterate_matches_repeats(ex61):
    once = delta_iterate(ex61, 2)
    assert ideal_equals(once, delta_ideal(ex61))
    twice = delta_iterate(ex61, 3)
    assert ideal_equals(twice, delta_ideal(delta_ideal(ex61)))
    with pytest.raises(DomainError):
        delta_iterate(ex61, 0)


def test_order_locus(ex61):
    # the fixture has order 2, so the order >= 2 locus is proper ...
    assert not is_unit_ideal(order_locus_ideal(ex61, 2))
    # ... and the order >= 3 locus is empty
    assert is_unit_ideal(order_locus_ideal(ex61, 3))


def test_hs_fixture_origin(ex61):
    assert hs_sequence(ex61, 3).values == (1, 5, 14, 30)
    assert hs_sequence(ex61, 3, cumulative=True).values == (1, 6, 20, 50)


def test_hs_unit_raises():
    ctx = make_context(["x", "y"])
    unit = Ideal.of(ctx, order_for(ctx), [parse_polynomial("1 + x", ctx)])
    with pytest.raises(DomainError):
        hs_sequence(unit, 3)
    cusp = Ideal.of(ctx, order_for(ctx), [parse_polynomial("y^2 - x^3", ctx)])
    with pytest.raises(DomainError):
        hs_sequence(cusp, 3, point=Point.of(1, 7))
    with pytest.raises(DomainError):
        hs_sequence(cusp, -1)


def _staircase_count(gens, nvars, degree):
    lead = [g for g in gens]
    count = 0
    for exps in itertools.product(range(degree + 1), repeat=nvars):
        if sum(exps) != degree:
            continue
        if any(all(a >= b for a, b in zip(exps, m)) for m in lead):
            continue
        count += 1
    return count


def test_hs_matches_staircase_counting_random():
    rng = random.Random(302)
    for _ in range(100):
        ctx = SMALL_CONTEXTS[rng.randrange(3)]
        ideal = random_monomial_ideal(rng, ctx, 6, 3)
        depth = rng.randint(1, 8)
        seq = hs_sequence(ideal, depth)
        monomials = [g.leading_exponents(ideal.order) for g in ideal.generators]
        expected = tuple(_staircase_count(monomials, ctx.nvars, d)
                         for d in range(depth + 1))
        assert seq.values == expected


def test_hs_at_sampled_points():
    ctx = make_context(["x", "y"])
    ideal = Ideal.of(ctx, order_for(ctx), [parse_polynomial("y^2 - x^3", ctx)])
    origin = hs_sequence(ideal, 3)
    assert origin.values == (1, 2, 2, 2)
    smooth = hs_sequence(ideal, 3, point=Point.of(1, 1))
    assert smooth.values == (1, 1, 1, 1)
    assert hs_compare(smooth, origin) == -1


def test_hs_compare_rules():
    ctx = make_context(["x"])
    ideal = Ideal.of(ctx, order_for(ctx), [parse_polynomial("x^2", ctx)])
    a = hs_sequence(ideal, 3)
    b = hs_sequence(ideal, 3)
    assert hs_compare(a, b) == 0
    with pytest.raises(DomainError):
        hs_compare(a, hs_sequence(ideal, 2))
    with pytest.raises(DomainError):
        hs_compare(a, hs_sequence(ideal, 3, cumulative=True))
