"""End-to-end scenario reports for the built-in examples.

A report runs the whole pipeline on one example: order and slice sequence
of the input, the staged construction with its working ideal, the
suggested center, every blowup chart with strict and weak transforms,
coefficient ideals of the weak transforms, and the chart-by-chart
equivalence table. The text is deterministic, so reports can be pinned
byte for byte.
"""

from __future__ import annotations

from .blowup import Center, ranked_charts, strict_transform, weak_transform
from .coeff import (coeff_ideal_villamayor, expand_weighted, monomial_split,
                    weighted_order)
from .errors import InputError
from .fixtures import EXAMPLE_NAMES, example_ideal
from .hybrid import lemma_equivalence_check, staged_build, suggest_center
from .idealfile import describe_order
from .ideals import Ideal, is_unit_ideal
from .invariants import hs_sequence, order_locus_ideal, order_of_ideal
from .parsing import format_polynomial
from .rings import INFINITE_ORDER

HS_DEPTH = 3


def _num(value) -> str:
    return "infinite" if value == INFINITE_ORDER else str(value)


def _gen_lines(ideal: Ideal, indent: str) -> list[str]:
    return [indent + format_polynomial(g, ideal.order) for g in ideal.generators]


def _hs_text(ideal: Ideal, depth: int = HS_DEPTH) -> str:
    return " ".join(str(v) for v in hs_sequence(ideal, depth))


def _monomial_text(exponents: dict[str, int]) -> str:
    parts = []
    for name, k in exponents.items():
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts) if parts else "1"


def _chart_block(number: int, chart: str, ideal: Ideal, center: Center,
                 working: Ideal, base_order: int, coeff_var: str | None) -> list[str]:
    lines = [f"Chart {number}: E = V({chart})"]
    strict = strict_transform(ideal, center, chart).ideal
    lines.append("  strict transform:")
    lines.extend(_gen_lines(strict, "    "))
    strict_order = order_of_ideal(strict)
    lines.append(f"  order at chart origin: {_num(strict_order)}")
    if strict_order >= 1 and strict_order != INFINITE_ORDER:
        lines.append(f"  slice sequence to degree {HS_DEPTH}: {_hs_text(strict)}")
    if is_unit_ideal(order_locus_ideal(strict, 2)):
        lines.append("  already non-singular: the locus of order at least 2 is empty")
    weak = weak_transform(ideal, center, chart)
    lines.append(f"  weak transform (exceptional exponent {weak.controlled_exponent}):")
    lines.extend(_gen_lines(weak.ideal, "    "))
    weak_order = order_of_ideal(weak.ideal)
    lines.append(f"  order at chart origin: {_num(weak_order)}")
    if coeff_var is not None and weak_order == base_order:
        ws = coeff_ideal_villamayor(weak.ideal, coeff_var, order_bound=base_order)
        lines.append(f"  coefficient ideal of the weak transform in {coeff_var}"
                     f" at reference order {base_order}:")
        lines.append(f"    weighted order: {_num(weighted_order(ws))}")
        exponents, rest = monomial_split(expand_weighted(ws), (chart,))
        lines.append(f"    monomial part: {_monomial_text(exponents)}")
        lines.append(f"    non-monomial part order: {_num(order_of_ideal(rest))}")
    weak_j = weak_transform(working, center, chart)
    lines.append("  weak transform of the working ideal:")
    lines.extend(_gen_lines(weak_j.ideal, "    "))
    lines.append(f"  order of the transformed working ideal: "
                 f"{_num(order_of_ideal(weak_j.ideal))}")
    return lines


def demo_report(name: str) -> str:
    if name not in EXAMPLE_NAMES:
        raise InputError(f"unknown demo scenario {name!r}")
    ideal = example_ideal(name)
    ctx = ideal.context
    lines = [f"demo {name}"]
    lines.append("ring: " + " ".join(ctx.variables))
    lines.append("order: " + describe_order(ctx, ideal.order))
    lines.append("input ideal:")
    lines.extend(_gen_lines(ideal, "  "))
    base_order = order_of_ideal(ideal)
    lines.append(f"order at origin: {_num(base_order)}")
    lines.append(f"slice sequence to degree {HS_DEPTH}: {_hs_text(ideal)}")
    lines.append("")

    staged = staged_build(ideal)
    lines.append("staged construction:")
    lines.append("  stage degrees: " + " ".join(str(d) for d in staged.degrees))
    lines.append("  contact frame: " + " ".join(staged.flag))
    lines.append(f"  working ideal J at final degree {staged.final_degree}:")
    lines.extend(_gen_lines(staged.jk, "    "))
    lines.append(f"  order of J: {_num(order_of_ideal(staged.jk))}")
    lines.append("")

    center_vars = suggest_center(ideal)
    lines.append("suggested center: V(" + ",".join(center_vars) + ")")
    lines.append("")

    center = Center.of(*center_vars)
    coeff_var = staged.flag[0] if staged.flag else None
    charts = ranked_charts(ideal, center)
    for number, chart in enumerate(charts, start=1):
        lines.extend(_chart_block(number, chart, ideal, center, staged.jk,
                                  int(base_order), coeff_var))
        lines.append("")

    checks = lemma_equivalence_check(ideal, center)
    by_chart = {c.chart: c for c in checks}
    lines.append(f"equivalence across the blowup (working degree {staged.final_degree}):")
    for number, chart in enumerate(charts, start=1):
        check = by_chart[chart]
        drop = "yes" if check.order_drop else "no"
        if check.trivial:
            left = "strict transform is a unit at the chart origin"
        else:
            left = "slice-sequence drop: " + ("yes" if check.hs_drop else "no")
        line = (f"  Chart {number} ({chart}): {left};"
                f" working-ideal order drop: {drop};"
                f" agree: {'yes' if check.equivalent else 'no'}")
        if check.rebuild_match is not None:
            line += f"; rebuilt working ideal matches: "
            line += "yes" if check.rebuild_match else "no"
        lines.append(line)
    verdict = "yes" if all(c.equivalent for c in checks) else "no"
    lines.append(f"all charts agree: {verdict}")
    return "\n".join(lines) + "\n"
