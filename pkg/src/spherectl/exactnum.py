"""Exact arithmetic substrate: reduced rationals, classes in Q/Z, residues.

Everything here is a Python int under the hood, so values never overflow and
every computation downstream is bit-exact.  All three types canonicalize on
construction, which makes equality a plain field-by-field comparison, and all
values are immutable, so they can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from math import gcd


@total_ordering
@dataclass(frozen=True)
class Rational:
    """A rational number num/den in lowest terms with den > 0.

    Zero is stored as 0/1.  Any integer pair is accepted by the constructor
    and reduced (negative denominators are folded into the numerator).
    """

    num: int
    den: int = 1

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        if den == 0:
            raise ZeroDivisionError("rational with zero denominator")
        if den < 0:
            num, den = -num, -den
        g = gcd(num, den)
        if g > 1:
            num //= g
            den //= g
        if num == 0:
            den = 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __add__(self, other: Rational) -> Rational:
        return Rational(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: Rational) -> Rational:
        return Rational(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other: Rational) -> Rational:
        return Rational(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: Rational) -> Rational:
        if other.num == 0:
            raise ZeroDivisionError("division by zero rational")
        return Rational(self.num * other.den, self.den * other.num)

    def __neg__(self) -> Rational:
        return Rational(-self.num, self.den)

    def __lt__(self, other: Rational) -> bool:
        # denominators are positive, so cross-multiplication preserves order
        return self.num * other.den < other.num * self.den

    def is_zero(self) -> bool:
        return self.num == 0

    def is_integer(self) -> bool:
        return self.den == 1

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


@total_ordering
@dataclass(frozen=True)
class QmodZ:
    """A class in Q/Z stored as its least nonnegative representative.

    Invariant: 0 <= num < den and gcd(num, den) = 1; the zero class is 0/1
    (gcd(0, d) = d collapses the denominator).  The constructor accepts any
    integer pair and canonicalizes, so QmodZ(q.num + t * q.den, q.den) == q.
    """

    num: int
    den: int = 1

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        if den == 0:
            raise ZeroDivisionError("Q/Z class with zero denominator")
        if den < 0:
            num, den = -num, -den
        num %= den
        g = gcd(num, den)
        if g > 1:
            num //= g
            den //= g
        if num == 0:
            den = 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def from_rational(cls, r: Rational) -> QmodZ:
        return cls(r.num, r.den)

    def __lt__(self, other: QmodZ) -> bool:
        return self.num * other.den < other.num * self.den

    def is_zero(self) -> bool:
        return self.num == 0

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


def qmodz_add(a: QmodZ, b: QmodZ) -> QmodZ:
    """Sum in Q/Z, reduced to the canonical representative."""
    return QmodZ(a.num * b.den + b.num * a.den, a.den * b.den)


def qmodz_neg(a: QmodZ) -> QmodZ:
    """Additive inverse in Q/Z; fixes the zero class and 2-torsion."""
    return QmodZ(-a.num, a.den)


@dataclass(frozen=True)
class Residue:
    """A residue class modulo a positive integer, normalized to [0, modulus)."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus <= 0:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "value", self.value % self.modulus)

    def __str__(self) -> str:
        return f"{self.value} mod {self.modulus}"
