"""Sparse multivariate polynomials with exact coefficients.

A polynomial in ``x1..xn`` is a dict mapping exponent tuples to nonzero raw
field elements (see :mod:`spechtlab.fields`).  Variables are 1-indexed in the
public API and in the text grammar, 0-indexed inside exponent tuples.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import (
    ArityMismatch,
    FieldMismatch,
    IndexOutOfRange,
    InvalidDegree,
    ParseError,
)
from .fields import QQ, FieldSpec

Monomial = tuple  # exponent vector


def monomial_degree(e: Monomial) -> int:
    return sum(e)


def monomial_weight(e: Monomial) -> int:
    """Number of variables that actually occur in the monomial."""
    return sum(1 for a in e if a)


def is_squarefree(e: Monomial) -> bool:
    return all(a <= 1 for a in e)


def _add_exps(a, b):
    return tuple([x + y for x, y in zip(a, b)])


@dataclass(frozen=True)
class MonomialOrder:
    """A term order: ``grevlex``, ``lex`` or ``block``.

    For ``block`` the (0-based) variable indices in ``block`` are compared
    first by grevlex; ties are broken by grevlex on the remaining variables.
    That makes it an elimination order for the block.
    """

    kind: str = "grevlex"
    block: tuple = ()

    def keyfunc(self, nvars: int) -> Callable[[Monomial], tuple]:
        if self.kind == "grevlex":
            return _grevlex_key
        if self.kind == "lex":
            return tuple
        if self.kind == "block":
            b = tuple(sorted(self.block))
            r = tuple(i for i in range(nvars) if i not in b)

            def key(e):
                eb = [e[i] for i in b]
                er = [e[i] for i in r]
                return (
                    (sum(eb),) + tuple(-x for x in reversed(eb))
                    + (sum(er),) + tuple(-x for x in reversed(er))
                )

            return key
        raise ValueError(f"unknown monomial order {self.kind!r}")

    def __str__(self):
        return self.kind if self.kind != "block" else f"block{list(self.block)}"


def _grevlex_key(e):
    return (sum(e),) + tuple([-x for x in reversed(e)])


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def elimination_order(block: Iterable[int]) -> MonomialOrder:
    return MonomialOrder("block", tuple(sorted(block)))


class Polynomial:
    """An immutable sparse polynomial over a :class:`FieldSpec`."""

    __slots__ = ("field", "nvars", "terms", "_hash")

    def __init__(self, field: FieldSpec, nvars: int, terms: dict | None = None):
        self.field = field
        self.nvars = nvars
        self.terms = {} if terms is None else {e: c for e, c in terms.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, field, nvars, terms):
        # trusted constructor: terms already clean
        obj = cls.__new__(cls)
        obj.field = field
        obj.nvars = nvars
        obj.terms = terms
        obj._hash = None
        return obj

    # constructors -----------------------------------------------------------

    @classmethod
    def zero(cls, field: FieldSpec, nvars: int) -> "Polynomial":
        return cls._raw(field, nvars, {})

    @classmethod
    def constant(cls, field: FieldSpec, nvars: int, c=1) -> "Polynomial":
        c = field(c)
        return cls._raw(field, nvars, {(0,) * nvars: c} if c != 0 else {})

    @classmethod
    def var(cls, field: FieldSpec, nvars: int, i: int) -> "Polynomial":
        if not 1 <= i <= nvars:
            raise IndexOutOfRange(f"x{i} outside x1..x{nvars}")
        e = [0] * nvars
        e[i - 1] = 1
        return cls._raw(field, nvars, {tuple(e): field.one})

    @classmethod
    def monomial(cls, field: FieldSpec, exps: Sequence[int], c=1) -> "Polynomial":
        c = field(c)
        return cls._raw(field, len(exps), {tuple(exps): c} if c != 0 else {})

    @classmethod
    def from_squarefree(cls, field: FieldSpec, nvars: int, indices: Iterable[int], c=1):
        """The monomial ``c * prod(x_i for i in indices)`` (1-based indices)."""
        e = [0] * nvars
        for i in indices:
            if not 1 <= i <= nvars:
                raise IndexOutOfRange(f"x{i} outside x1..x{nvars}")
            e[i - 1] += 1
        return cls.monomial(field, e, c)

    # basic protocol ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            if other.nvars != self.nvars:
                raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")
            return other
        return Polynomial.constant(self.field, self.nvars, other)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (
                self.field == other.field
                and self.nvars == other.nvars
                and self.terms == other.terms
            )
        try:
            return self == self._coerce(other)
        except (TypeError, FieldMismatch):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            items = frozenset((e, self.field.to_fraction(c)) for e, c in self.terms.items())
            self._hash = hash((self.field, self.nvars, items))
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        f = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = f.add(v, c)
                if v == 0:
                    del out[e]
                else:
                    out[e] = v
        return Polynomial._raw(f, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return Polynomial._raw(f, self.nvars, {e: f.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "Polynomial":
        f = self.field
        c = f(c)
        if c == 0:
            return Polynomial.zero(f, self.nvars)
        return Polynomial._raw(f, self.nvars, {e: f.mul(v, c) for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        f = self.field
        p = f.p
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exps(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        if p:
            out = {e: c % p for e, c in out.items() if c % p}
        else:
            out = {e: c for e, c in out.items() if c != 0}
        return Polynomial._raw(f, self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.field, self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # inspection -------------------------------------------------------------

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def coefficient(self, exps) -> object:
        return self.terms.get(tuple(exps), self.field.zero)

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        key = order.keyfunc(self.nvars)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder = GREVLEX):
        key = order.keyfunc(self.nvars)
        return max(self.terms, key=key)

    def leading_coefficient(self, order: MonomialOrder = GREVLEX):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.leading_coefficient(order)))

    def variables(self) -> set:
        """1-based indices of variables occurring in the polynomial."""
        return {i + 1 for e in self.terms for i, a in enumerate(e) if a}

    def evaluate(self, point: Sequence):
        f = self.field
        pt = [f(v) for v in point]
        if len(pt) != self.nvars:
            raise ArityMismatch(f"need {self.nvars} coordinates, got {len(pt)}")
        total = f.zero
        for e, c in self.terms.items():
            v = c
            for x, a in zip(pt, e):
                if a:
                    v = f.mul(v, x ** a if f.p == 0 else pow(int(x), a, f.p))
            total = f.add(total, v)
        return total

    def embed(self, nvars: int, positions: Sequence[int] | None = None) -> "Polynomial":
        """Move into a ring with ``nvars`` variables.

        ``positions[i]`` is the (0-based) new index of old variable ``i``;
        by default variables keep their index.  Dropped variables must not occur.
        """
        if positions is None:
            positions = range(self.nvars)
        positions = list(positions)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * nvars
            for i, a in enumerate(e):
                if a:
                    j = positions[i] if i < len(positions) else None
                    if j is None or j >= nvars:
                        raise IndexOutOfRange(f"x{i + 1} has no image in {nvars} variables")
                    ne[j] += a
            out[tuple(ne)] = c
        return Polynomial._raw(self.field, nvars, out)

    def change_field(self, field: FieldSpec) -> "Polynomial":
        """Reduce integer/rational coefficients into another field."""
        return Polynomial(
            field, self.nvars, {e: field(self.field.to_fraction(c)) for e, c in self.terms.items()}
        )

    # text -------------------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r}, {self.field}, nvars={self.nvars})"


# ---------------------------------------------------------------------------
# constructions


def _check_index(i: int, n: int):
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"index {i} outside 1..{n}")


def vandermonde(S: Iterable[int], n: int, field: FieldSpec = QQ) -> Polynomial:
    """``prod_{i<j in S} (x_i - x_j)`` with ``S`` sorted ascending."""
    S = sorted(S)
    for i in S:
        _check_index(i, n)
    result = Polynomial.constant(field, n, 1)
    for a, b in itertools.combinations(S, 2):
        result = result * (Polynomial.var(field, n, a) - Polynomial.var(field, n, b))
    return result


def elementary_symmetric(j: int, variables: Iterable[int], n: int, field: FieldSpec = QQ) -> Polynomial:
    variables = sorted(set(variables))
    for i in variables:
        _check_index(i, n)
    if j < 0 or j > len(variables):
        raise InvalidDegree(f"e_{j} undefined on {len(variables)} variables")
    terms = {}
    for combo in itertools.combinations(variables, j):
        e = [0] * n
        for i in combo:
            e[i - 1] = 1
        terms[tuple(e)] = field.one
    return Polynomial._raw(field, n, terms)


def substitute(f: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    """Ring homomorphism sending ``x_i`` to ``images[i-1]``."""
    if len(images) != f.nvars:
        raise ArityMismatch(f"{len(images)} images for {f.nvars} variables")
    if not images:
        return f
    m = images[0].nvars
    field = f.field
    for g in images:
        if g.field != field:
            raise FieldMismatch(f"{g.field} image for {field} polynomial")
        if g.nvars != m:
            raise ArityMismatch("images live in rings of different sizes")
    powers: dict = {}

    def power(i, a):
        key = (i, a)
        if key not in powers:
            powers[key] = images[i] ** a
        return powers[key]

    result = Polynomial.zero(field, m)
    for e, c in f.terms.items():
        t = Polynomial.constant(field, m, 1).scale(c)
        for i, a in enumerate(e):
            if a:
                t = t * power(i, a)
        result = result + t
    return result


def partial_derivative(f: Polynomial, i: int) -> Polynomial:
    _check_index(i, f.nvars)
    field = f.field
    k = i - 1
    out = {}
    for e, c in f.terms.items():
        a = e[k]
        if a:
            v = field.mul(c, field(a))
            if v != 0:
                ne = list(e)
                ne[k] -= 1
                out[tuple(ne)] = v
    return Polynomial._raw(field, f.nvars, out)


def lowering_derivative(f: Polynomial) -> Polynomial:
    """The operator ``d/dx1 + ... + d/dxn`` (formal, so it respects char p)."""
    result = Polynomial.zero(f.field, f.nvars)
    for i in range(1, f.nvars + 1):
        result = result + partial_derivative(f, i)
    return result


# ---------------------------------------------------------------------------
# text grammar:  x1^2*x2 - 3/2*x3


def _format_monomial(e) -> str:
    parts = []
    for i, a in enumerate(e):
        if a == 1:
            parts.append(f"x{i + 1}")
        elif a > 1:
            parts.append(f"x{i + 1}^{a}")
    return "*".join(parts)


def format_poly(f: Polynomial) -> str:
    if not f.terms:
        return "0"
    field = f.field
    out = []
    for e, c in f.sorted_terms(GREVLEX):
        if field.p == 0:
            neg = c < 0
            mag = -c if neg else c
        else:
            neg, mag = False, c
        mono = _format_monomial(e)
        mag_s = field.format(mag)
        if not mono:
            body = mag_s
        elif mag_s == "1":
            body = mono
        else:
            body = f"{mag_s}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|x(?P<var>\d+)|(?P<op>[-+*/^]))")


def _tokenize(text: str):
    pos = 0
    text = text.strip()
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        if m.group("num") is not None:
            tokens.append(("num", int(m.group("num"))))
        elif m.group("var") is not None:
            tokens.append(("var", int(m.group("var"))))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


def parse_poly(text: str, nvars: int | None = None, field: FieldSpec = QQ) -> Polynomial:
    """Parse the text grammar.  ``nvars`` defaults to the largest index seen."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take(kind, value=None):
        nonlocal pos
        t = peek()
        if t[0] != kind or (value is not None and t[1] != value):
            raise ParseError(f"expected {value or kind} at token {pos}, got {t[1]!r}")
        pos += 1
        return t[1]

    terms = []  # (sign, num, den, {var: exp})

    def parse_factor(exps):
        i = take("var")
        if i < 1:
            raise ParseError("variables are numbered from x1")
        a = 1
        if peek() == ("op", "^"):
            take("op", "^")
            a = take("num")
        exps[i] = exps.get(i, 0) + a

    def parse_term(sign):
        num, den = 1, 1
        exps: dict = {}
        if peek()[0] == "num":
            num = take("num")
            if peek() == ("op", "/"):
                take("op", "/")
                den = take("num")
                if den == 0:
                    raise ParseError("zero denominator")
            if peek() == ("op", "*"):
                take("op", "*")
                parse_factor(exps)
        else:
            parse_factor(exps)
        while peek() == ("op", "*"):
            take("op", "*")
            parse_factor(exps)
        terms.append((sign, num, den, exps))

    sign = 1
    if peek() in (("op", "-"), ("op", "+")):
        sign = -1 if take("op") == "-" else 1
    parse_term(sign)
    while pos < len(tokens):
        op = take("op")
        if op not in "+-":
            raise ParseError(f"unexpected operator {op!r}")
        parse_term(-1 if op == "-" else 1)

    seen = max((i for t in terms for i in t[3]), default=0)
    if nvars is None:
        nvars = max(seen, 1)
    if seen > nvars:
        raise IndexOutOfRange(f"x{seen} used in a ring with {nvars} variables")
    result = Polynomial.zero(field, nvars)
    from fractions import Fraction

    for sign, num, den, exps in terms:
        e = [0] * nvars
        for i, a in exps.items():
            e[i - 1] += a
        result = result + Polynomial.monomial(field, e, Fraction(sign * num, den))
    return result
