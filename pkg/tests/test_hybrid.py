import random
from fractions import Fraction

import pytest

from desing.blowup import Center
from desing.coeff import weighted_order
from desing.errors import DomainError
from desing.hybrid import (
    apply_substitutions,
    compose_substitutions,
    hybrid_invariant,
    lemma_equivalence_check,
    maximal_contact_frame,
    modified_coeff_ideal,
    staged_build,
    suggest_center,
)
from desing.ideals import Ideal, ideal_equals
from desing.invariants import INFINITE_ORDER, order_of_ideal
from desing.parsing import parse_polynomial
from desing.rings import Polynomial, make_context, order_for
from util import ideal_like


def unipotent_images(rng, ctx, jet_degree, max_extra_terms):
    """A random coordinate change with identity linear part."""
    images = {}
    for name in ctx.variables:
        q = Polynomial.zero(ctx)
        for _ in range(rng.randint(0, max_extra_terms)):
            exps = [0] * ctx.nvars
            for _ in range(rng.randint(2, jet_degree)):
                exps[rng.randrange(ctx.nvars)] += 1
            q = q + Polynomial.monomial(ctx, exps,
                                        Fraction(rng.choice([-2, -1, 1, 2])))
        images[name] = Polynomial.variable(ctx, name) + q
    return images


def test_staged_build_first_fixture(ex61):
    staged = staged_build(ex61)
    assert staged.degrees == (2, 5)
    assert staged.flag == ("z", "x", "y", "w", "v")
    assert tuple(m.frame_size for m in staged.marked) == (1, 5)
    assert staged.final_degree == 5
    expected = ideal_like(ex61, ["z^5 + x^3*y^3*z^3", "x^5 + w^5 + y^2*v^3"])
    assert ideal_equals(staged.jk, expected)
    assert order_of_ideal(staged.jk) == 5


def test_staged_build_second_fixture(ex62):
    staged = staged_build(ex62)
    assert staged.degrees == (5, 9)
    assert staged.flag == ("x", "z")
    assert tuple(m.frame_size for m in staged.marked) == (1, 2)
    assert staged.final_degree == 9
    expected = ideal_like(ex62, ["x^9 + y^11*x^4", "z^9 + x^9"])
    assert ideal_equals(staged.jk, expected)
    assert order_of_ideal(staged.jk) == 9


def test_staged_build_rejects_trivial():
    ctx = make_context(["x", "y"])
    with pytest.raises(DomainError):
        staged_build(Ideal.of(ctx, order_for(ctx), []))
    unit = Ideal.of(ctx, order_for(ctx), [parse_polynomial("1 + x", ctx)])
    with pytest.raises(DomainError):
        staged_build(unit)


def test_maximal_contact_frame_simple():
    ctx = make_context(["x", "y", "z"])
    ideal = Ideal.of(ctx, order_for(ctx),
                     [parse_polynomial("z^2 + x^3*y^3", ctx)])
    frame = maximal_contact_frame(ideal, 2)
    assert list(frame.pivots) == ["z"]


def test_suggest_center(ex61, ex62):
    assert suggest_center(ex61) == ("x", "y", "z", "w", "v")
    assert suggest_center(ex62) == ("x", "y", "z")


def test_modified_coeff_weighted_orders(ex61, ex62):
    # the first fixture's frame exhausts every variable, so nothing is
    # left to collect coefficients in
    assert weighted_order(modified_coeff_ideal(staged_build(ex61))) == \
        INFINITE_ORDER
    assert weighted_order(modified_coeff_ideal(staged_build(ex62))) == 798336


def test_hybrid_invariant_first_fixture(ex61):
    inv = hybrid_invariant(ex61)
    assert [(e.order, e.ambient) for e in inv.entries] == \
        [(5, 5), (INFINITE_ORDER, 0)]
    assert inv.descent_variables == ()


def test_hybrid_invariant_second_fixture(ex62):
    inv = hybrid_invariant(ex62)
    assert [(e.order, e.ambient) for e in inv.entries] == \
        [(9, 3), (798336, 1), (INFINITE_ORDER, 0)]
    assert inv.descent_variables == ("y",)


def test_lemma_equivalence_first_fixture(ex61):
    checks = lemma_equivalence_check(ex61, Center.of(*suggest_center(ex61)))
    by_chart = {c.chart: c for c in checks}
    assert set(by_chart) == {"x", "y", "z", "w", "v"}
    assert all(c.equivalent for c in checks)
    for chart in ("x", "z", "w"):
        assert by_chart[chart].trivial
        assert by_chart[chart].hs_drop is None
        assert by_chart[chart].order_drop
    for chart in ("y", "v"):
        assert not by_chart[chart].trivial
        assert by_chart[chart].hs_drop is True
        assert by_chart[chart].order_drop


def test_lemma_equivalence_second_fixture(ex62):
    checks = lemma_equivalence_check(ex62, Center.of(*suggest_center(ex62)))
    by_chart = {c.chart: c for c in checks}
    assert all(c.equivalent for c in checks)
    assert by_chart["x"].trivial and by_chart["z"].trivial
    stubborn = by_chart["y"]
    assert not stubborn.trivial
    assert stubborn.hs_drop is False
    assert stubborn.order_drop is False
    assert stubborn.rebuild_match is True


def test_substitution_composition():
    ctx = make_context(["x", "y"])
    x = Polynomial.variable(ctx, "x")
    y = Polynomial.variable(ctx, "y")
    first = {"x": x + y * y}
    second = {"y": y + x * x}
    composed = compose_substitutions((first, second))
    f = x * y
    assert apply_substitutions(f, (first, second)) == f.substitute(composed)


def test_staging_invariance_under_unipotent_maps(ex61, ex62):
    rng = random.Random(501)
    base1 = staged_build(ex61)
    wo1 = weighted_order(modified_coeff_ideal(base1))
    for _ in range(25):
        images = unipotent_images(rng, ex61.context, 3, 2)
        pert = ex61.map_gens(lambda g: g.substitute(images))
        staged = staged_build(pert, bound=12)
        assert staged.degrees == base1.degrees
        assert tuple(m.frame_size for m in staged.marked) == (1, 5)
        assert order_of_ideal(staged.jk) == 5
        assert weighted_order(modified_coeff_ideal(staged)) == wo1
    base2 = staged_build(ex62)
    wo2 = weighted_order(modified_coeff_ideal(base2))
    for i in range(25):
        if i % 5 == 0:
            images = unipotent_images(rng, ex62.context, 3, 2)
        else:
            images = unipotent_images(rng, ex62.context, 2, 1)
        pert = ex62.map_gens(lambda g: g.substitute(images))
        staged = staged_build(pert)
        assert staged.degrees == base2.degrees
        assert tuple(m.frame_size for m in staged.marked) == (1, 2)
        assert order_of_ideal(staged.jk) == 9
        assert weighted_order(modified_coeff_ideal(staged)) == wo2
