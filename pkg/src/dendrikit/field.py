"""Exact scalar fields: the rationals and prime fields GF(p).

Internally every structure stores raw values (``Fraction`` for the
rationals, ``int`` in ``range(p)`` for GF(p)) and performs arithmetic
through its ``Field`` object.  ``Scalar`` is the user-facing wrapper
that remembers its field.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .errors import (
    DenominatorZero,
    DivisionByZero,
    FieldMismatch,
    InfiniteField,
    ParseError,
)

_NUMBER = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(-?\d+)\s*)?$")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


class Field:
    """Arithmetic on raw values of one field."""

    name = "field"
    characteristic = 0

    def is_finite(self) -> bool:
        return self.characteristic != 0

    # concrete subclasses supply these
    def coerce(self, value) -> object:  # pragma: no cover - abstract
        raise NotImplementedError

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def add(self, a, b):
        return self.coerce(a + b)

    def sub(self, a, b):
        return self.coerce(a - b)

    def mul(self, a, b):
        return self.coerce(a * b)

    def neg(self, a):
        return self.coerce(-a)

    def is_zero(self, a) -> bool:
        return a == 0

    def inv(self, a):  # pragma: no cover - abstract
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def parse(self, text: str):
        m = _NUMBER.match(str(text))
        if not m:
            raise ParseError(f"cannot parse scalar {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise DenominatorZero(f"zero denominator in {text!r}")
        return self.from_fraction(Fraction(num, den))

    def from_fraction(self, q: Fraction):  # pragma: no cover - abstract
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def elements(self) -> list:
        raise InfiniteField(f"{self.name} has infinitely many elements")

    def sqrt(self, a):
        """A square root of ``a`` in the field, or None if there is none."""
        raise NotImplementedError

    def __call__(self, value) -> "Scalar":
        if isinstance(value, str):
            return Scalar(self.parse(value), self)
        return Scalar(self.coerce(value), self)


class RationalField(Field):
    name = "q"
    characteristic = 0

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, str)):
            return Fraction(value)
        raise FieldMismatch(f"cannot coerce {value!r} into the rationals")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("division by zero in the rationals")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero in the rationals")
        return a / b

    def from_fraction(self, q):
        return q

    def format(self, a) -> str:
        return str(a)

    def sqrt(self, a):
        if a < 0:
            return None
        n, d = a.numerator, a.denominator
        rn, rd = math.isqrt(n), math.isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
        return None

    def __repr__(self) -> str:
        return "QQ"

    def __reduce__(self):
        return (_rationals, ())


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"gf:{p}"

    def coerce(self, value):
        if isinstance(value, Fraction):
            return self.from_fraction(value)
        if isinstance(value, int):
            return value % self.p
        raise FieldMismatch(f"cannot coerce {value!r} into GF({self.p})")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero(f"division by zero in GF({self.p})")
        return pow(a, -1, self.p)

    def from_fraction(self, q):
        if q.denominator % self.p == 0:
            raise DenominatorZero(f"{q} has no image in GF({self.p})")
        return q.numerator * pow(q.denominator, -1, self.p) % self.p

    def elements(self) -> list:
        return list(range(self.p))

    def sqrt(self, a):
        for r in range(self.p):
            if r * r % self.p == a % self.p:
                return r
        return None

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("gf", self.p))

    def __reduce__(self):
        return (gf, (self.p,))


QQ = RationalField()


def _rationals() -> RationalField:
    return QQ


@lru_cache(maxsize=None)
def gf(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(spec) -> Field:
    """Accept ``"q"``, ``"gf:p"``, an int prime, or a Field."""
    if isinstance(spec, Field):
        return spec
    if isinstance(spec, int):
        return gf(spec)
    text = str(spec).strip().lower()
    if text in ("q", "qq", "rationals"):
        return QQ
    m = re.fullmatch(r"(?:gf|f)[:(]?(\d+)\)?", text)
    if m:
        return gf(int(m.group(1)))
    raise ParseError(f"unknown field {spec!r}")


@dataclass(frozen=True)
class Scalar:
    value: object
    field: Field

    def _other(self, other) -> object:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.field.add(self.value, self._other(other)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field.sub(self.value, self._other(other)), self.field)

    def __rsub__(self, other):
        return Scalar(self.field.sub(self._other(other), self.value), self.field)

    def __mul__(self, other):
        return Scalar(self.field.mul(self.value, self._other(other)), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field.div(self.value, self._other(other)), self.field)

    def __rtruediv__(self, other):
        return Scalar(self.field.div(self._other(other), self.value), self.field)

    def __neg__(self):
        return Scalar(self.field.neg(self.value), self.field)

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except FieldMismatch:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __str__(self) -> str:
        return self.field.format(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self}, {self.field!r})"


def parse_scalar(text: str, field) -> Scalar:
    f = field_from_spec(field)
    return Scalar(f.parse(text), f)


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    ops = {"+": Scalar.__add__, "-": Scalar.__sub__, "*": Scalar.__mul__, "/": Scalar.__truediv__}
    if op not in ops:
        raise ValueError(f"unknown operation {op!r}")
    return ops[op](a, b)


def enumerate_field(field) -> Iterator[Scalar]:
    f = field_from_spec(field)
    for v in f.elements():
        yield Scalar(v, f)
