import random

import pytest

from desing.errors import DomainError
from desing.ideals import (
    Ideal,
    ideal_contains,
    ideal_equals,
    ideal_member,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_unit_ideal,
    leading_ideal,
    normal_form,
    quotient_by_variable,
    reduced_standard_basis,
    resume_standard_basis,
    saturate_by_variable,
    spoly,
    standard_basis,
    weak_normal_form,
)
from desing.parsing import parse_polynomial
from desing.rings import Polynomial, make_context, order_for
from util import SMALL_CONTEXTS, ideal_like, random_ideal, random_polynomial

XY = make_context(["x", "y"])


def xy_ideal(*texts, kind="negdegrevlex"):
    order = order_for(XY, kind)
    return Ideal.of(XY, order, [parse_polynomial(t, XY) for t in texts])


def test_buchberger_mora_criterion_random():
    # certificate check: every S-polynomial of the computed basis reduces
    # to zero, and the input generators are members
    rng = random.Random(201)
    for i in range(200):
        ctx = SMALL_CONTEXTS[i % 3]
        kind = "negdegrevlex" if i % 2 == 0 else "degrevlex"
        ideal = random_ideal(rng, ctx, 5, 3, order_for(ctx, kind),
                             allow_constant=False)
        elems = standard_basis(ideal).elements
        for a in range(len(elems)):
            for b in range(a + 1, len(elems)):
                s = spoly(elems[a], elems[b], ideal.order)
                assert normal_form(s, elems, ideal.order).is_zero()
        for g in ideal.generators:
            assert normal_form(g, elems, ideal.order).is_zero()


def test_membership_certificates_random():
    rng = random.Random(202)
    for _ in range(40):
        ctx = SMALL_CONTEXTS[rng.randrange(3)]
        ideal = random_ideal(rng, ctx, 4, 2, allow_constant=False)
        combo = Polynomial.zero(ctx)
        for g in ideal.generators:
            combo = combo + g * random_polynomial(rng, ctx, 2, 2)
        assert ideal_member(combo, ideal)


def test_weak_normal_form_head_only():
    ctx = XY
    order = order_for(ctx)
    x = parse_polynomial("x", ctx)
    f = parse_polynomial("x + y^3", ctx)
    nf = weak_normal_form(f, [x], order)
    # the head x goes away; weak normal form leaves the tail alone
    assert nf == parse_polynomial("y^3", ctx)


def test_truncated_basis_resume():
    ideal = xy_ideal("x^2 + y^5", "x*y^2 + y^4")
    partial = standard_basis(ideal, truncation_degree=3)
    assert partial.truncation_degree == 3
    full = resume_standard_basis(partial, None)
    direct = standard_basis(ideal)
    assert full.elements == direct.elements
    assert full.complete
    with pytest.raises(DomainError):
        resume_standard_basis(partial, 2)
    with pytest.raises(DomainError):
        standard_basis(ideal, truncation_degree=-1)


def test_truncated_basis_heads_agree_below_bound():
    rng = random.Random(203)
    for _ in range(20):
        ctx = SMALL_CONTEXTS[rng.randrange(3)]
        ideal = random_ideal(rng, ctx, 4, 2, allow_constant=False)
        bound = 3
        partial = standard_basis(ideal, truncation_degree=bound)
        full = standard_basis(ideal)
        low = {g.leading_exponents(ideal.order) for g in full
               if sum(g.leading_exponents(ideal.order)) <= bound}
        got = {g.leading_exponents(ideal.order) for g in partial
               if sum(g.leading_exponents(ideal.order)) <= bound}
        assert low == got


def test_reduced_basis_fixtures(ex61, ex62):
    assert reduced_standard_basis(ex61) == ex61.generators
    reduced = reduced_standard_basis(ex62)
    assert reduced == tuple(
        parse_polynomial(t, ex62.context)
        for t in ("x^5 + y^11", "z^9 - y^11*x^4"))


def test_leading_ideal_fixtures(ex61, ex62):
    assert leading_ideal(ex61) == ideal_like(ex61, ["z^2", "x^5"])
    assert leading_ideal(ex62) == ideal_like(ex62, ["x^5", "z^9"])


def test_localized_units():
    local_unit = xy_ideal("1 + x")
    assert is_unit_ideal(local_unit)
    assert ideal_equals(local_unit, xy_ideal("1"))
    assert ideal_member(parse_polynomial("y^7", XY), local_unit)
    # globally 1 + x generates a proper ideal
    assert not is_unit_ideal(xy_ideal("1 + x", kind="degrevlex"))
    assert not is_unit_ideal(xy_ideal("x", "y"))


def test_ideal_equality_presentation_independent():
    left = xy_ideal("x^2 + y^3", "y^5")
    right = xy_ideal("2*x^2 + 2*y^3 + y^5", "-3*y^5")
    assert ideal_equals(left, right)
    assert not ideal_equals(left, xy_ideal("x^2 + y^3"))


def test_ideal_operations():
    a = xy_ideal("x^2")
    b = xy_ideal("y^3", "x*y")
    total = ideal_sum(a, b)
    assert ideal_member(parse_polynomial("x^2 + y^3", XY), total)
    prod = ideal_product(a, b)
    assert ideal_equals(prod, xy_ideal("x^2*y^3", "x^3*y"))
    cube = ideal_power(b, 2)
    assert ideal_member(parse_polynomial("y^6", XY), cube)
    assert ideal_contains(total, a)
    assert ideal_contains(total, b)
    assert not ideal_contains(a, b)


def test_quotient_by_variable_examples():
    assert ideal_equals(quotient_by_variable(xy_ideal("x^2", "x*y"), "x"),
                        xy_ideal("x", "y"))
    # a variable not dividing anything gives the ideal back
    assert ideal_equals(quotient_by_variable(xy_ideal("x^2 + y^3"), "y"),
                        xy_ideal("x^2 + y^3"))


def test_quotient_inverts_multiplication_random():
    rng = random.Random(204)
    for _ in range(15):
        ctx = SMALL_CONTEXTS[1 + rng.randrange(2)]
        ideal = random_ideal(rng, ctx, 3, 2, allow_constant=False)
        name = ctx.variables[rng.randrange(ctx.nvars)]
        v = Polynomial.variable(ctx, name)
        scaled = ideal.map_gens(lambda g: g * v)
        assert ideal_equals(quotient_by_variable(scaled, name), ideal)


def test_saturation_examples():
    sat, steps = saturate_by_variable(xy_ideal("x^2*y", "x^3"), "y")
    assert ideal_equals(sat, xy_ideal("x^2"))
    assert steps >= 1
    # saturating by a variable in every generator empties nothing further
    stable, _ = saturate_by_variable(xy_ideal("x^2 + y^3"), "x")
    again = quotient_by_variable(stable, "x")
    assert ideal_equals(stable, again)


def test_zero_and_unit_edge_cases():
    ctx = XY
    order = order_for(ctx)
    zero = Ideal.of(ctx, order, [])
    assert zero.is_zero()
    assert ideal_equals(quotient_by_variable(zero, "x"), zero)
    unit = xy_ideal("1")
    sat, _ = saturate_by_variable(unit, "x")
    assert is_unit_ideal(sat)
