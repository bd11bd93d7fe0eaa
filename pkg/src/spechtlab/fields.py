"""Exact coefficient fields: the rationals and prime fields.

Elements are handled in two layers.  ``FieldSpec`` knows how to do arithmetic
on *raw* values (``gmpy2.mpq`` for the rationals, a Python ``int`` in
``[0, p)`` for a prime field); the polynomial and matrix code works on raw
values for speed.  ``Scalar`` wraps a raw value together with its field and
is the checked, user-facing element type.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

from .errors import DivisionByZero, FieldMismatch, InvalidField

__all__ = [
    "FieldSpec",
    "QQ",
    "GF",
    "Scalar",
    "parse_field",
    "scalar_add",
    "scalar_mul",
    "scalar_inv",
    "binomial",
    "is_prime",
    "egcd_inverse",
]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    r = math.isqrt(p)
    f = 3
    while f <= r:
        if p % f == 0:
            return False
        f += 2
    return True


def egcd_inverse(a: int, p: int) -> int:
    """Inverse of ``a`` modulo ``p`` by the extended Euclidean algorithm."""
    a %= p
    if a == 0:
        raise DivisionByZero(f"0 has no inverse modulo {p}")
    r0, r1 = p, a
    s0, s1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    # r0 == gcd == 1 for prime p
    return s0 % p


@dataclass(frozen=True)
class FieldSpec:
    """The rationals (``p == 0``) or the prime field with ``p`` elements."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not is_prime(self.p):
            raise InvalidField(f"{self.p} is not prime")

    @property
    def kind(self) -> str:
        return "Rationals" if self.p == 0 else "PrimeField"

    @property
    def characteristic(self) -> int:
        return self.p

    def __str__(self) -> str:
        return "q" if self.p == 0 else f"fp:{self.p}"

    def __repr__(self) -> str:
        return f"FieldSpec({self})"

    # raw element arithmetic -------------------------------------------------

    @property
    def zero(self):
        return mpq(0) if self.p == 0 else 0

    @property
    def one(self):
        return mpq(1) if self.p == 0 else 1

    def __call__(self, value):
        """Coerce an int, Fraction, mpq or ``"a/b"`` string into a raw element."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"{value.field} element used in {self}")
            return value.value
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.p == 0:
            if isinstance(value, (int, Rational)) or type(value) is type(mpq(0)):
                return mpq(value)
            raise TypeError(f"cannot coerce {value!r} into {self}")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Rational) or type(value) is type(mpq(0)):
            num, den = int(value.numerator), int(value.denominator)
            return num * egcd_inverse(den, self.p) % self.p
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def add(self, a, b):
        return a + b if self.p == 0 else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p == 0 else (a - b) % self.p

    def neg(self, a):
        return -a if self.p == 0 else (-a) % self.p

    def mul(self, a, b):
        return a * b if self.p == 0 else (a * b) % self.p

    def inv(self, a):
        if self.p == 0:
            if a == 0:
                raise DivisionByZero("division by zero in q")
            return 1 / mpq(a)
        return egcd_inverse(a, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0

    def to_fraction(self, a) -> Fraction:
        if self.p == 0:
            return Fraction(int(a.numerator), int(a.denominator))
        return Fraction(int(a))

    def format(self, a) -> str:
        if self.p == 0:
            num, den = int(a.numerator), int(a.denominator)
            return str(num) if den == 1 else f"{num}/{den}"
        return str(int(a))


QQ = FieldSpec(0)


def GF(p: int) -> FieldSpec:
    if p == 0:
        raise InvalidField("use QQ for characteristic zero")
    return FieldSpec(p)


def parse_field(text: str) -> FieldSpec:
    """Parse the command-line field grammar: ``q`` or ``fp:<p>``."""
    t = text.strip().lower()
    if t in ("q", "qq"):
        return QQ
    if t.startswith("fp:"):
        try:
            p = int(t[3:])
        except ValueError:
            raise InvalidField(f"bad prime in field spec {text!r}") from None
        if p == 0:
            raise InvalidField("fp:0 is not a field; use q")
        return FieldSpec(p)
    raise InvalidField(f"unrecognised field spec {text!r} (expected q or fp:<p>)")


@dataclass(frozen=True)
class Scalar:
    """A checked field element."""

    field: FieldSpec
    value: object

    @classmethod
    def of(cls, field: FieldSpec, value) -> "Scalar":
        return cls(field, field(value))

    def _check(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            return Scalar.of(self.field, other)
        if other.field != self.field:
            raise FieldMismatch(f"cannot combine {self.field} and {other.field}")
        return other

    def __add__(self, other):
        o = self._check(other)
        return Scalar(self.field, self.field.add(self.value, o.value))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        return Scalar(self.field, self.field.sub(self.value, o.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        o = self._check(other)
        return Scalar(self.field, self.field.mul(self.value, o.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._check(other)
        return Scalar(self.field, self.field.div(self.value, o.value))

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.field.to_fraction(self.value)))

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"Scalar({self}, {self.field})"


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def scalar_inv(a: Scalar) -> Scalar:
    return a.inverse()


def binomial(m: int, r: int) -> int:
    """Exact binomial coefficient, zero outside ``0 <= r <= m``."""
    if r < 0 or m < 0 or r > m:
        return 0
    return math.comb(m, r)
