"""Sparse multivariate polynomials over the rationals.

Polynomials are stored as maps from exponent tuples to nonzero Fractions,
so the zero polynomial is the empty map and all arithmetic is exact.
Monomial orders are values: a kind plus a permutation of the variables
(largest first), so the same ring supports several orders side by side.
The local kind ranks lower total degree as larger (1 > x), which is what
makes order-of-vanishing computations at the origin work.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from operator import add
from typing import Iterable, Mapping, Sequence

from .errors import ContextMismatchError, DomainError, UnknownVariableError

INFINITE_ORDER = math.inf

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")


def binomial(n: int, k: int) -> int:
    return math.comb(n, k) if n >= 0 and 0 <= k <= n else 0


@dataclass(frozen=True)
class RingContext:
    """An ordered tuple of variable names fixing the ambient ring."""

    variables: tuple[str, ...]

    def __post_init__(self):
        if not self.variables:
            raise DomainError("a ring context needs at least one variable")
        seen = set()
        for name in self.variables:
            if not _NAME_RE.match(name):
                raise DomainError(f"invalid variable name {name!r}")
            if name in seen:
                raise DomainError(f"duplicate variable name {name!r}")
            seen.add(name)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariableError(name) from None

    def without(self, names: Iterable[str]) -> "RingContext":
        dropped = set(names)
        keep = tuple(v for v in self.variables if v not in dropped)
        return RingContext(keep)


def make_context(variables: Sequence[str]) -> RingContext:
    return RingContext(tuple(variables))


class Monomial:
    """An exponent vector with its total degree cached."""

    __slots__ = ("exponents", "degree")

    def __init__(self, exponents: Sequence[int]):
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise DomainError("monomial exponents must be non-negative")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "degree", sum(exps))

    def __setattr__(self, *a):
        raise AttributeError("Monomial is immutable")

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __repr__(self):
        return f"Monomial{self.exponents}"


def exp_degree(e: tuple[int, ...]) -> int:
    return sum(e)


def exp_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(map(add, a, b))


def exp_divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def exp_div(b: tuple[int, ...], a: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(y - x for x, y in zip(a, b))


def exp_lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


class Comparison(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


ORDER_KINDS = ("negdegrevlex", "degrevlex", "lex")


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order: kind plus variable permutation, largest first.

    sort_key maps an exponent tuple to a tuple that compares the same way
    the order does, so max()/sorted() give leading data directly.
    """

    kind: str
    permutation: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise DomainError(f"unknown order kind {self.kind!r}")
        if sorted(self.permutation) != list(range(len(self.permutation))):
            raise DomainError("permutation must reorder all variable indices")

    @property
    def is_local(self) -> bool:
        return self.kind == "negdegrevlex"

    def sort_key(self, exponents: tuple[int, ...]):
        if len(exponents) != len(self.permutation):
            raise ContextMismatchError("exponent length does not match order")
        permuted = [exponents[i] for i in self.permutation]
        if self.kind == "lex":
            return tuple(permuted)
        revlex = tuple(-e for e in reversed(permuted))
        degree = sum(exponents)
        if self.kind == "degrevlex":
            return (degree,) + revlex
        return (-degree,) + revlex

    def compare(self, a: Monomial | tuple[int, ...], b: Monomial | tuple[int, ...]) -> Comparison:
        ea = a.exponents if isinstance(a, Monomial) else tuple(a)
        eb = b.exponents if isinstance(b, Monomial) else tuple(b)
        ka, kb = self.sort_key(ea), self.sort_key(eb)
        if ka < kb:
            return Comparison.LESS
        if ka > kb:
            return Comparison.GREATER
        return Comparison.EQUAL


def order_for(context: RingContext, kind: str = "negdegrevlex",
              largest_first: Sequence[str] | None = None) -> MonomialOrder:
    """Build an order for a context, optionally naming the variables largest first."""
    if largest_first is None:
        perm = tuple(range(context.nvars))
    else:
        names = list(largest_first)
        if sorted(names) != sorted(context.variables):
            raise DomainError("order permutation must name every variable exactly once")
        perm = tuple(context.index(n) for n in names)
    return MonomialOrder(kind, perm)


def local_order(context: RingContext) -> MonomialOrder:
    return order_for(context, "negdegrevlex")


@dataclass(frozen=True)
class Point:
    """A rational point of the ambient affine space."""

    coordinates: tuple[Fraction, ...]

    @classmethod
    def of(cls, *coords) -> "Point":
        return cls(tuple(Fraction(c) for c in coords))

    @classmethod
    def origin(cls, context: RingContext) -> "Point":
        return cls((Fraction(0),) * context.nvars)

    def is_origin(self) -> bool:
        return all(c == 0 for c in self.coordinates)


class Polynomial:
    """Immutable sparse polynomial over a fixed context."""

    __slots__ = ("context", "_coeffs", "_hash", "_order", "_cache")

    def __init__(self, context: RingContext, coeffs: Mapping[tuple[int, ...], Fraction]):
        clean: dict[tuple[int, ...], Fraction] = {}
        n = context.nvars
        for exps, c in coeffs.items():
            c = Fraction(c)
            if c == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != n:
                raise ContextMismatchError("exponent tuple length does not match context")
            if any(e < 0 for e in exps):
                raise DomainError("monomial exponents must be non-negative")
            clean[exps] = c
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "_coeffs", clean)
        object.__setattr__(self, "_hash", None)
        object.__setattr__(self, "_order", None)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def _raw(cls, context: RingContext,
             coeffs: dict[tuple[int, ...], Fraction]) -> "Polynomial":
        # trusted path for internal arithmetic: the dict is owned by the
        # caller and already holds exact nonzero Fractions under valid
        # exponent tuples
        self = object.__new__(cls)
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "_coeffs", coeffs)
        object.__setattr__(self, "_hash", None)
        object.__setattr__(self, "_order", None)
        object.__setattr__(self, "_cache", {})
        return self

    @classmethod
    def zero(cls, context: RingContext) -> "Polynomial":
        return cls(context, {})

    @classmethod
    def constant(cls, context: RingContext, value) -> "Polynomial":
        return cls(context, {(0,) * context.nvars: Fraction(value)})

    @classmethod
    def one(cls, context: RingContext) -> "Polynomial":
        return cls.constant(context, 1)

    @classmethod
    def variable(cls, context: RingContext, name: str) -> "Polynomial":
        i = context.index(name)
        exps = tuple(1 if j == i else 0 for j in range(context.nvars))
        return cls(context, {exps: Fraction(1)})

    @classmethod
    def from_terms(cls, context: RingContext,
                   terms: Iterable[tuple[Fraction | int, Sequence[int]]]) -> "Polynomial":
        acc: dict[tuple[int, ...], Fraction] = {}
        for coeff, exps in terms:
            key = tuple(int(e) for e in exps)
            acc[key] = acc.get(key, Fraction(0)) + Fraction(coeff)
        return cls(context, acc)

    @classmethod
    def monomial(cls, context: RingContext, exps: Sequence[int], coeff=1) -> "Polynomial":
        return cls(context, {tuple(int(e) for e in exps): Fraction(coeff)})

    # -- basic structure ---------------------------------------------

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._coeffs.get(tuple(exps), Fraction(0))

    def items(self):
        return self._coeffs.items()

    def terms(self, order: MonomialOrder | None = None) -> list[tuple[Fraction, Monomial]]:
        """Terms sorted descending under order (canonical local order by default)."""
        if order is None:
            order = local_order(self.context)
        keys = sorted(self._coeffs, key=order.sort_key, reverse=True)
        return [(self._coeffs[k], Monomial(k)) for k in keys]

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.context == other.context
                and self._coeffs == other._coeffs)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.context, frozenset(self._coeffs.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        from .parsing import format_polynomial
        return f"<{format_polynomial(self)}>"

    # -- arithmetic --------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.context != other.context:
            raise ContextMismatchError("operands live in different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc = dict(self._coeffs)
        for e, c in other._coeffs.items():
            s = acc.get(e, Fraction(0)) + c
            if s == 0:
                acc.pop(e, None)
            else:
                acc[e] = s
        return Polynomial._raw(self.context, acc)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc = dict(self._coeffs)
        for e, c in other._coeffs.items():
            s = acc.get(e, Fraction(0)) - c
            if s == 0:
                acc.pop(e, None)
            else:
                acc[e] = s
        return Polynomial._raw(self.context, acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.context, {e: -c for e, c in self._coeffs.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        if not self._coeffs or not other._coeffs:
            return Polynomial.zero(self.context)
        acc: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in self._coeffs.items():
            for eb, cb in other._coeffs.items():
                key = exp_mul(ea, eb)
                s = acc.get(key, Fraction(0)) + ca * cb
                if s == 0:
                    acc.pop(key, None)
                else:
                    acc[key] = s
        return Polynomial._raw(self.context, acc)

    def scale(self, value) -> "Polynomial":
        q = Fraction(value)
        if q == 0:
            return Polynomial.zero(self.context)
        return Polynomial._raw(self.context, {e: c * q for e, c in self._coeffs.items()})

    def mul_term(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        """Multiply by a single term; cheaper than building a Polynomial first."""
        q = Fraction(coeff)
        if q == 0:
            return Polynomial.zero(self.context)
        shift = tuple(int(e) for e in exps)
        if any(e < 0 for e in shift):
            raise DomainError("monomial exponents must be non-negative")
        return Polynomial._raw(self.context,
                               {exp_mul(e, shift): c * q for e, c in self._coeffs.items()})

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise DomainError("negative polynomial powers are not defined")
        result = Polynomial.one(self.context)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- leading data and degrees ------------------------------------

    def leading_exponents(self, order: MonomialOrder) -> tuple[int, ...]:
        if not self._coeffs:
            raise DomainError("the zero polynomial has no leading term")
        cached = self._cache.get(order)
        if cached is None:
            cached = max(self._coeffs, key=order.sort_key)
            self._cache[order] = cached
        return cached

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        return Monomial(self.leading_exponents(order))

    def leading_coefficient(self, order: MonomialOrder) -> Fraction:
        return self._coeffs[self.leading_exponents(order)]

    def leading_term(self, order: MonomialOrder) -> tuple[Fraction, Monomial]:
        e = self.leading_exponents(order)
        return self._coeffs[e], Monomial(e)

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if not self._coeffs:
            return self
        lc = self.leading_coefficient(order)
        return self if lc == 1 else self.scale(1 / lc)

    def order(self) -> int | float:
        """Minimal total degree of a term; +infinity for the zero polynomial."""
        if not self._coeffs:
            return INFINITE_ORDER
        v = self._order
        if v is None:
            v = min(exp_degree(e) for e in self._coeffs)
            object.__setattr__(self, "_order", v)
        return v

    def degree(self) -> int | float:
        if not self._coeffs:
            return -INFINITE_ORDER
        return max(exp_degree(e) for e in self._coeffs)

    def ecart(self, order: MonomialOrder) -> int:
        """Spread between total degree and leading-term degree."""
        return int(self.degree()) - exp_degree(self.leading_exponents(order))

    def homogeneous_part(self, degree: int) -> "Polynomial":
        return Polynomial._raw(self.context,
                               {e: c for e, c in self._coeffs.items()
                                if exp_degree(e) == degree})

    def constant_term(self) -> Fraction:
        return self._coeffs.get((0,) * self.context.nvars, Fraction(0))

    def support_variables(self) -> set[str]:
        used: set[int] = set()
        for e in self._coeffs:
            used.update(i for i, x in enumerate(e) if x > 0)
        return {self.context.variables[i] for i in used}

    # -- calculus and maps -------------------------------------------

    def derivative(self, name: str) -> "Polynomial":
        i = self.context.index(name)
        acc: dict[tuple[int, ...], Fraction] = {}
        for e, c in self._coeffs.items():
            if e[i] == 0:
                continue
            de = list(e)
            de[i] -= 1
            acc[tuple(de)] = c * e[i]
        return Polynomial._raw(self.context, acc)

    def evaluate(self, point: Point) -> Fraction:
        if len(point.coordinates) != self.context.nvars:
            raise ContextMismatchError("point dimension does not match context")
        total = Fraction(0)
        for e, c in self._coeffs.items():
            v = c
            for x, k in zip(point.coordinates, e):
                if k:
                    v *= x ** k
            total += v
        return total

    def substitute(self, images: Mapping[str, "Polynomial"],
                   bound: int | None = None) -> "Polynomial":
        """Apply the ring map sending each named variable to its image.

        With bound given, the result is cut off past that total degree
        and every intermediate product is truncated the same way; source
        terms whose image cannot reach under the cutoff are skipped.
        """
        if not images:
            if bound is None:
                return self
            return Polynomial._raw(self.context, {
                e: c for e, c in self._coeffs.items() if exp_degree(e) <= bound})
        idx_images: dict[int, Polynomial] = {}
        for name, img in images.items():
            i = self.context.index(name)
            self._check(img)
            idx_images[i] = img
        sub = tuple(sorted(idx_images))
        img_order = {i: idx_images[i].order() for i in sub}

        # annotated term lists: denominators cleared so the inner product
        # loop runs on plain integers, sorted by degree when bounded so
        # products can stop early
        annotations: dict[int, tuple[list, int]] = {}

        def annotate(p: "Polynomial") -> tuple[list, int]:
            got = annotations.get(id(p))
            if got is None:
                den = 1
                for c in p._coeffs.values():
                    den = den * c.denominator // math.gcd(den, c.denominator)
                terms = [(e, c.numerator * (den // c.denominator), exp_degree(e))
                         for e, c in p._coeffs.items()]
                if bound is not None:
                    terms = [t for t in terms if t[2] <= bound]
                    terms.sort(key=lambda t: t[2])
                annotations[id(p)] = got = (terms, den)
            return got

        def multiply(a: "Polynomial", b: "Polynomial") -> "Polynomial":
            bt, bden = annotate(b)
            aden = 1
            for c in a._coeffs.values():
                aden = aden * c.denominator // math.gcd(aden, c.denominator)
            prods: dict[tuple[int, ...], int] = {}
            for ea, ca in a._coeffs.items():
                na = ca.numerator * (aden // ca.denominator)
                if bound is not None:
                    room = bound - exp_degree(ea)
                    if room < 0:
                        continue
                for eb, nb, db in bt:
                    if bound is not None and db > room:
                        break
                    key = tuple(map(add, ea, eb))
                    prev = prods.get(key)
                    s = na * nb if prev is None else prev + na * nb
                    if s:
                        prods[key] = s
                    else:
                        del prods[key]
            den = aden * bden
            return Polynomial._raw(self.context,
                                   {k: Fraction(n, den) for k, n in prods.items()})

        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i: int, k: int) -> Polynomial:
            key = (i, k)
            got = powers.get(key)
            if got is None:
                if k == 1:
                    got = idx_images[i].substitute({}, bound) \
                        if bound is not None else idx_images[i]
                else:
                    got = multiply(power(i, k - 1), idx_images[i])
                powers[key] = got
            return got

        # group source terms by their exponents over the substituted
        # variables: each pattern costs one product, not one per term
        groups: dict[tuple[int, ...], dict[tuple[int, ...], Fraction]] = {}
        for e, c in self._coeffs.items():
            fixed = tuple(0 if i in idx_images else x for i, x in enumerate(e))
            pat = tuple(e[i] for i in sub)
            if bound is not None:
                low = exp_degree(fixed) + sum(
                    k * img_order[i] for i, k in zip(sub, pat) if k)
                if low > bound:
                    continue
            groups.setdefault(pat, {})[fixed] = c

        pat_products: dict[tuple[int, ...], "Polynomial | None"] = {}

        def pat_product(pat: tuple[int, ...]) -> "Polynomial | None":
            if pat in pat_products:
                return pat_products[pat]
            piece: Polynomial | None = None
            for i, k in zip(sub, pat):
                if k:
                    p = power(i, k)
                    piece = p if piece is None else multiply(piece, p)
            pat_products[pat] = piece
            return piece

        acc: dict[tuple[int, ...], Fraction] = {}
        for pat, fixed_terms in groups.items():
            base = Polynomial._raw(self.context, fixed_terms)
            factor = pat_product(pat)
            piece = base if factor is None else multiply(base, factor)
            for te, tc in piece._coeffs.items():
                prev = acc.get(te)
                s = tc if prev is None else prev + tc
                if s:
                    acc[te] = s
                else:
                    del acc[te]
        return Polynomial._raw(self.context, acc)

    def translated(self, point: Point) -> "Polynomial":
        """Rewrite around point: substitute v -> v + point_v, moving point to the origin."""
        if len(point.coordinates) != self.context.nvars:
            raise ContextMismatchError("point dimension does not match context")
        images = {}
        for name, a in zip(self.context.variables, point.coordinates):
            if a != 0:
                images[name] = Polynomial.variable(self.context, name) + \
                    Polynomial.constant(self.context, a)
        return self.substitute(images)


def remap(f: Polynomial, target: RingContext) -> Polynomial:
    """Move f into target, matching variables by name.

    Variables absent from target must be unused in f; variables new in
    target get exponent zero. Used to restrict to subrings and to embed
    into extended rings.
    """
    positions: list[int | None] = [None] * f.context.nvars
    for i, name in enumerate(f.context.variables):
        try:
            positions[i] = target.variables.index(name)
        except ValueError:
            positions[i] = None
    acc: dict[tuple[int, ...], Fraction] = {}
    for e, c in f.items():
        out = [0] * target.nvars
        for i, x in enumerate(e):
            if x == 0:
                continue
            j = positions[i]
            if j is None:
                raise DomainError(
                    f"polynomial uses {f.context.variables[i]!r}, absent from target context")
            out[j] = x
        acc[tuple(out)] = c
    return Polynomial(target, acc)


def order_of_poly(f: Polynomial) -> int | float:
    return f.order()
