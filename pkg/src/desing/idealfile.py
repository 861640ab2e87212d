"""Line-oriented ideal files.

A file declares a ring, optionally an order, and a list of generators:

    # hypersurface with a fat point
    ring: x, y, z
    order: negdegrevlex z > y > x
    gen: x^5 + y^11
    gen: z^9 + x^9

Blank lines and ``#`` comments are skipped.  The ``ring:`` line names the
variables (commas optional).  The ``order:`` line is optional and gives the
order kind, optionally followed by the variables largest first; without it
the file gets the local order with the declared variables largest first.
Every error found while reading carries the offending line number.
"""

from __future__ import annotations

from .errors import DesingError, InputError, ParseError
from .ideals import Ideal
from .parsing import format_polynomial, parse_polynomial
from .rings import ORDER_KINDS, RingContext, order_for

_IDENTITY_KINDS = set(ORDER_KINDS)


def _split_names(text: str) -> list[str]:
    return [p for p in text.replace(",", " ").split() if p]


def _parse_order_line(body: str, context: RingContext, lineno: int):
    parts = body.split(None, 1)
    kind = parts[0]
    if kind not in _IDENTITY_KINDS:
        raise ParseError(f"unknown order kind {kind!r}", line=lineno)
    largest_first = None
    if len(parts) == 2 and parts[1].strip():
        largest_first = [p.strip() for p in parts[1].split(">")]
        if any(not p for p in largest_first):
            raise ParseError("malformed order precedence list", line=lineno)
    try:
        return order_for(context, kind, largest_first)
    except DesingError as exc:
        raise ParseError(str(exc), line=lineno) from exc


def loads_ideal(text: str) -> Ideal:
    """Parse ideal-file text into an Ideal."""
    context = None
    order = None
    gens: list[tuple[str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, body = line.partition(":")
        key, body = key.strip(), body.strip()
        if not sep:
            raise ParseError(f"expected 'ring:', 'order:' or 'gen:', got {raw.strip()!r}",
                             line=lineno)
        if key == "ring":
            if context is not None:
                raise ParseError("duplicate ring line", line=lineno)
            names = _split_names(body)
            if not names:
                raise ParseError("ring line names no variables", line=lineno)
            try:
                context = RingContext(tuple(names))
            except DesingError as exc:
                raise ParseError(str(exc), line=lineno) from exc
        elif key == "order":
            if context is None:
                raise ParseError("order line before ring line", line=lineno)
            if order is not None:
                raise ParseError("duplicate order line", line=lineno)
            order = _parse_order_line(body, context, lineno)
        elif key == "gen":
            if context is None:
                raise ParseError("gen line before ring line", line=lineno)
            gens.append((body, lineno))
        else:
            raise ParseError(f"unknown directive {key!r}", line=lineno)
    if context is None:
        raise ParseError("file declares no ring")
    if not gens:
        raise ParseError("file declares no generators")
    if order is None:
        order = order_for(context)
    polys = []
    for body, lineno in gens:
        try:
            polys.append(parse_polynomial(body, context))
        except DesingError as exc:
            raise ParseError(str(exc), line=lineno) from exc
    return Ideal.of(context, order, polys)


def load_ideal_file(path: str) -> Ideal:
    """Read and parse an ideal file from disk."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return loads_ideal(text)


def describe_order(context: RingContext, order) -> str:
    """Order text as it appears on an order line, e.g. 'negdegrevlex z > y > x'."""
    text = order.kind
    if order.permutation != tuple(range(context.nvars)):
        names = [context.variables[i] for i in order.permutation]
        text += " " + " > ".join(names)
    return text


def dumps_ideal(ideal: Ideal) -> str:
    """Canonical file text for an ideal; loads_ideal round-trips it."""
    ctx = ideal.context
    lines = ["ring: " + " ".join(ctx.variables)]
    lines.append("order: " + describe_order(ctx, ideal.order))
    for g in ideal.generators:
        lines.append("gen: " + format_polynomial(g, ideal.order))
    return "\n".join(lines) + "\n"


def dump_ideal_file(path: str, ideal: Ideal) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_ideal(ideal))
