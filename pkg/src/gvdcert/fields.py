"""Exact coefficient fields: the rationals and prime fields GF(p).

Coefficients are plain Python values (Fraction for the rationals, int in
[0, p) for GF(p)); the Field object carries the arithmetic. Using stdlib
Fraction keeps rational arithmetic exact with arbitrary precision and
lowest-terms, positive-denominator normal form for free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import BadParameter, ZeroInversion

Coeff = Union[Fraction, int]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for word-sized n."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """A coefficient field: kind 'QQ' (char 0) or 'GF' with prime char."""

    kind: str
    char: int = 0

    def __post_init__(self):
        if self.kind == "QQ":
            if self.char != 0:
                raise BadParameter("QQ has characteristic 0")
        elif self.kind == "GF":
            if self.char >= 2 ** 63:
                raise BadParameter("prime field characteristic must be word-sized")
            if not _is_prime(self.char):
                raise BadParameter(f"GF characteristic must be prime, got {self.char}")
        else:
            raise BadParameter(f"unknown field kind {self.kind!r}")

    # -- element constructors ------------------------------------------

    @property
    def zero(self) -> Coeff:
        return Fraction(0) if self.kind == "QQ" else 0

    @property
    def one(self) -> Coeff:
        return Fraction(1) if self.kind == "QQ" else 1

    def from_int(self, n: int) -> Coeff:
        return Fraction(n) if self.kind == "QQ" else n % self.char

    def from_fraction(self, q: Fraction) -> Coeff:
        if self.kind == "QQ":
            return q
        return self.mul(self.from_int(q.numerator), self.inv(self.from_int(q.denominator)))

    # -- arithmetic ----------------------------------------------------

    def add(self, a: Coeff, b: Coeff) -> Coeff:
        return a + b if self.kind == "QQ" else (a + b) % self.char

    def sub(self, a: Coeff, b: Coeff) -> Coeff:
        return a - b if self.kind == "QQ" else (a - b) % self.char

    def mul(self, a: Coeff, b: Coeff) -> Coeff:
        return a * b if self.kind == "QQ" else (a * b) % self.char

    def neg(self, a: Coeff) -> Coeff:
        return -a if self.kind == "QQ" else (-a) % self.char

    def inv(self, a: Coeff) -> Coeff:
        if not a:
            raise ZeroInversion("cannot invert 0")
        if self.kind == "QQ":
            return 1 / Fraction(a)
        # Fermat inverse; char is prime so a^(p-2) inverts any nonzero a.
        return pow(a, self.char - 2, self.char)

    def div(self, a: Coeff, b: Coeff) -> Coeff:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Coeff) -> bool:
        return not a

    # -- text ----------------------------------------------------------

    def coeff_str(self, a: Coeff) -> str:
        return str(a)

    def spec_str(self) -> str:
        return "QQ" if self.kind == "QQ" else f"GF({self.char})"


QQ = Field("QQ")


def GF(p: int) -> Field:
    return Field("GF", p)


def field_from_spec(text: str) -> Field:
    """Parse 'QQ' or 'GF(p)' into a Field."""
    text = text.strip()
    if text == "QQ":
        return QQ
    if text.startswith("GF(") and text.endswith(")"):
        inner = text[3:-1].strip()
        if not inner.isdigit():
            raise BadParameter(f"bad field spec {text!r}")
        return GF(int(inner))
    raise BadParameter(f"bad field spec {text!r}")


def field_inverse(field: Field, a: Coeff) -> Coeff:
    """Multiplicative inverse of a nonzero element (ZeroInversion on 0)."""
    return field.inv(a)
