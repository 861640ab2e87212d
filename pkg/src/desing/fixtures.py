"""Built-in worked examples used by the demo command and the tests."""

from __future__ import annotations

from .idealfile import dumps_ideal
from .ideals import Ideal
from .parsing import parse_polynomial
from .rings import make_context, order_for

EXAMPLE_NAMES = ("ex61", "ex62")


def ex61_ideal() -> Ideal:
    """Two hypersurfaces in five variables, singular at the origin."""
    ctx = make_context(["x", "y", "z", "w", "v"])
    gens = ["z^2 + x^3*y^3", "w^5 + x^5 + v^3*y^2"]
    return Ideal.of(ctx, order_for(ctx),
                    [parse_polynomial(g, ctx) for g in gens])


def ex62_ideal() -> Ideal:
    """Two hypersurfaces in three variables, z ranked above y above x."""
    ctx = make_context(["x", "y", "z"])
    gens = ["x^5 + y^11", "z^9 + x^9"]
    return Ideal.of(ctx, order_for(ctx, largest_first=["z", "y", "x"]),
                    [parse_polynomial(g, ctx) for g in gens])


def example_ideal(name: str) -> Ideal:
    if name == "ex61":
        return ex61_ideal()
    if name == "ex62":
        return ex62_ideal()
    raise KeyError(name)


def example_file_text(name: str) -> str:
    return dumps_ideal(example_ideal(name))
