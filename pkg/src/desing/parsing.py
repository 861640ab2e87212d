"""Parsing and printing of polynomial expressions.

Grammar (whitespace insignificant, no implicit multiplication):

    expr     := ["+" | "-"] term (("+" | "-") term)*
    term     := factor ("*" factor)*
    factor   := base ("^" nat)?
    base     := rational | variable | "(" expr ")"
    rational := int ("/" nat)?

The formatter writes terms descending under a monomial order and the
output is guaranteed to parse back to the same polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .rings import MonomialOrder, Polynomial, RingContext, local_order

_TOKEN_KINDS = ("number", "name", "op", "end")


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("number", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append(_Token("op", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", position=i)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], context: RingContext):
        self.tokens = tokens
        self.context = context
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, text: str) -> _Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != text:
            raise ParseError(f"expected {text!r}", position=tok.pos)
        return self.take()

    def parse(self) -> Polynomial:
        poly = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected token {tok.text!r}", position=tok.pos)
        return poly

    def expr(self) -> Polynomial:
        tok = self.peek()
        negate = False
        if tok.kind == "op" and tok.text in "+-":
            self.take()
            negate = tok.text == "-"
        poly = self.term()
        if negate:
            poly = -poly
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.take()
                rhs = self.term()
                poly = poly - rhs if tok.text == "-" else poly + rhs
            else:
                return poly

    def term(self) -> Polynomial:
        poly = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.take()
                poly = poly * self.factor()
            else:
                return poly

    def factor(self) -> Polynomial:
        base = self.base()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.take()
            exp_tok = self.peek()
            if exp_tok.kind != "number":
                raise ParseError("exponent must be a non-negative integer literal",
                                 position=exp_tok.pos)
            self.take()
            return base ** int(exp_tok.text)
        return base

    def base(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "number":
            self.take()
            value = Fraction(int(tok.text))
            nxt = self.peek()
            if nxt.kind == "op" and nxt.text == "/":
                self.take()
                den_tok = self.peek()
                if den_tok.kind != "number":
                    raise ParseError("denominator must be a positive integer literal",
                                     position=den_tok.pos)
                self.take()
                den = int(den_tok.text)
                if den == 0:
                    raise ParseError("zero denominator", position=den_tok.pos)
                value /= den
            return Polynomial.constant(self.context, value)
        if tok.kind == "name":
            self.take()
            # raises UnknownVariableError for names outside the context
            return Polynomial.variable(self.context, tok.text)
        if tok.kind == "op" and tok.text == "(":
            self.take()
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected token {tok.text or 'end of input'!r}", position=tok.pos)


def parse_polynomial(text: str, context: RingContext) -> Polynomial:
    return _Parser(_tokenize(text), context).parse()


def _format_monomial(exps: tuple[int, ...], context: RingContext,
                     order: MonomialOrder) -> str:
    parts = []
    for i in order.permutation:
        e = exps[i]
        if e == 0:
            continue
        name = context.variables[i]
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(f: Polynomial, order: MonomialOrder | None = None) -> str:
    """Canonical text form: terms descending under order, fractions reduced."""
    if order is None:
        order = local_order(f.context)
    if f.is_zero():
        return "0"
    pieces: list[str] = []
    for coeff, mono in f.terms(order):
        mono_text = _format_monomial(mono.exponents, f.context, order)
        mag = abs(coeff)
        if not mono_text:
            body = str(mag)
        elif mag == 1:
            body = mono_text
        else:
            body = f"{mag}*{mono_text}"
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if coeff > 0 else f" - {body}")
    return "".join(pieces)
