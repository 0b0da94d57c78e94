"""Exact coefficient fields: the rationals and prime fields GF(p)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import isqrt


@total_ordering
class _Infinity:
    """Order value of the zero polynomial; compares above every number."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("reesalg.inf")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"


INF = _Infinity()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for q in range(3, isqrt(n) + 1, 2):
        if n % q == 0:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """The prime field of the given characteristic.

    Elements are ``int``/``Fraction`` values when the characteristic is 0 and
    ints in ``range(p)`` otherwise.
    """

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not _is_prime(p):
            raise ValueError(f"characteristic must be 0 or a prime, got {p}")
        if p >= 2**31:
            raise ValueError("characteristic must be below 2^31")

    @property
    def p(self) -> int:
        return self.characteristic

    def __call__(self, value) -> int | Fraction:
        """Coerce an int or Fraction into the field."""
        p = self.characteristic
        if isinstance(value, Fraction):
            if p == 0:
                return value.numerator if value.denominator == 1 else value
            den = value.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"{value} has no image in GF({p})")
            return value.numerator * pow(den, -1, p) % p
        if isinstance(value, int):
            return value % p if p else value
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        if p:
            return pow(a, -1, p)
        r = Fraction(1) / a
        return r.numerator if r.denominator == 1 else r

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def mul(self, a, b):
        p = self.characteristic
        return a * b % p if p else a * b

    def add(self, a, b):
        p = self.characteristic
        return (a + b) % p if p else a + b

    def elements(self):
        """Iterate over GF(p); only defined in positive characteristic."""
        if not self.characteristic:
            raise ValueError("the rationals are not enumerable here")
        return range(self.characteristic)

    def render(self, c) -> str:
        if isinstance(c, Fraction) and c.denominator == 1:
            return str(c.numerator)
        return str(c)

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)
