"""Exact values of the form rational * prod sqrt(triangle coefficients).

Every 6j symbol is a rational number times the square roots of the four
triangle coefficients of its triads, so this small algebra is enough to do
recoupling identities with zero tolerance.  Addition is only defined for
values carrying the identical radical multiset; anything else is a hard
error rather than a silent float fallback.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError, RadicalMismatchError
from .factored import FactorialProduct
from .halfint import HalfInt, halfint


def triangle_ok(a, b, c) -> bool:
    """Triangle test: |a-b| <= c <= a+b with integer perimeter."""
    ta, tb, tc = halfint(a).twice, halfint(b).twice, halfint(c).twice
    return abs(ta - tb) <= tc <= ta + tb and (ta + tb + tc) % 2 == 0


class Triad:
    """An unordered triple of spins, stored sorted for canonical hashing."""

    __slots__ = ("spins",)

    def __init__(self, a, b, c):
        spins = tuple(sorted((halfint(a), halfint(b), halfint(c)),
                             key=lambda h: h.twice))
        object.__setattr__(self, "spins", spins)

    def __setattr__(self, name, value):
        raise AttributeError("Triad is immutable")

    @property
    def key(self) -> tuple[int, int, int]:
        return tuple(s.twice for s in self.spins)

    def is_triangle(self) -> bool:
        a, b, c = self.spins
        return triangle_ok(a, b, c)

    def __eq__(self, other):
        return isinstance(other, Triad) and self.key == other.key

    def __lt__(self, other):
        return self.key < other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "Triad(%s)" % ", ".join(str(s) for s in self.spins)


def triangle_coeff_sq(a, b=None, c=None) -> Fraction:
    """Squared triangle coefficient (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!.

    Exact positive rational; raises DomainError on a triangle violation.
    """
    if b is None:
        a, b, c = a.spins
    a, b, c = halfint(a), halfint(b), halfint(c)
    if not triangle_ok(a, b, c):
        raise DomainError(f"triangle violation: ({a}, {b}, {c})")
    f = FactorialProduct.from_factorial
    num = (f((a + b - c).as_int())
           * f((a - b + c).as_int())
           * f((-a + b + c).as_int()))
    return (num / f((a + b + c).as_int() + 1)).to_fraction()


def _scaled_ratio(n: int, d: int) -> tuple[float, int]:
    """n/d as (mantissa, exp2) with the mantissa in float range."""
    if n == 0:
        return 0.0, 0
    sign = -1.0 if (n < 0) != (d < 0) else 1.0
    n, d = abs(n), abs(d)
    sn = max(n.bit_length() - 64, 0)
    sd = max(d.bit_length() - 64, 0)
    m, e = math.frexp((n >> sn) / (d >> sd))
    return sign * m, e + sn - sd


class RadicalValue:
    """coeff * prod over radicals of sqrt(triangle_coeff_sq(triad)).

    Normalized so no triad appears twice (pairs fold into the rational
    coefficient) and a zero coefficient clears the radical list.
    Instances are immutable values.
    """

    __slots__ = ("coeff", "radicals")

    def __init__(self, coeff, radicals=()):
        coeff = Fraction(coeff)
        rads: list[Triad] = []
        for t in sorted(radicals):
            if rads and rads[-1] == t:
                coeff *= triangle_coeff_sq(rads.pop())
            else:
                rads.append(t)
        if coeff == 0:
            rads = []
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "radicals", tuple(rads))

    def __setattr__(self, name, value):
        raise AttributeError("RadicalValue is immutable")

    @classmethod
    def zero(cls) -> "RadicalValue":
        return cls(0)

    @classmethod
    def one(cls) -> "RadicalValue":
        return cls(1)

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    def sign(self) -> int:
        return (self.coeff > 0) - (self.coeff < 0)

    # -- algebra ------------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, RadicalValue):
            if self.is_zero or other.is_zero:
                return RadicalValue.zero()
            return RadicalValue(self.coeff * other.coeff,
                                self.radicals + other.radicals)
        if isinstance(other, (int, Fraction)):
            return RadicalValue(self.coeff * other, self.radicals)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return RadicalValue(-self.coeff, self.radicals)

    def __add__(self, other):
        if not isinstance(other, RadicalValue):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.radicals != other.radicals:
            raise RadicalMismatchError(
                f"cannot add radical multisets {self.radicals} and {other.radicals}")
        return RadicalValue(self.coeff + other.coeff, self.radicals)

    def __sub__(self, other):
        if not isinstance(other, RadicalValue):
            return NotImplemented
        return self + (-other)

    def square(self) -> Fraction:
        """Exact square of the denoted real number."""
        q = self.coeff * self.coeff
        for t in self.radicals:
            q *= triangle_coeff_sq(t)
        return q

    def equals(self, other: "RadicalValue") -> bool:
        """True iff both denote the same real number.

        Common radicals cancel; the residue is compared by sign and exact
        square.
        """
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        if self.sign() != other.sign():
            return False
        ra, rb = list(self.radicals), []
        for t in other.radicals:
            try:
                ra.remove(t)
            except ValueError:
                rb.append(t)
        qa = self.coeff * self.coeff
        for t in ra:
            qa *= triangle_coeff_sq(t)
        qb = other.coeff * other.coeff
        for t in rb:
            qb *= triangle_coeff_sq(t)
        return qa == qb

    def __eq__(self, other):
        # structural equality; use .equals() for value equality
        if not isinstance(other, RadicalValue):
            return NotImplemented
        return self.coeff == other.coeff and self.radicals == other.radicals

    def __hash__(self):
        return hash((self.coeff, self.radicals))

    # -- conversion -----------------------------------------------------------

    def to_float(self) -> float:
        """Double-precision value with exponent tracking so huge exact
        rationals convert without intermediate overflow."""
        if self.is_zero:
            return 0.0
        mant, exp = _scaled_ratio(self.coeff.numerator, self.coeff.denominator)
        for t in self.radicals:
            d2 = triangle_coeff_sq(t)
            dm, de = _scaled_ratio(d2.numerator, d2.denominator)
            if de % 2:
                dm *= 2.0
                de -= 1
            mant *= math.sqrt(dm)
            exp += de // 2
            mant, e2 = math.frexp(mant)
            exp += e2
        try:
            return math.ldexp(mant, exp)
        except OverflowError:
            return math.copysign(math.inf, mant)

    def __repr__(self):
        if self.is_zero:
            return "RadicalValue(0)"
        parts = [str(self.coeff)]
        parts += [f"sqrt(tc2{t.key})" for t in self.radicals]
        return "RadicalValue(%s)" % " * ".join(parts)

    def describe(self) -> str:
        """Short human-readable exact form, e.g. '1/6' or '-1 sqrt(...)'."""
        if self.is_zero:
            return "0"
        if not self.radicals:
            return str(self.coeff)
        rad = " ".join("sqrt(tc2(%s))" % ",".join(str(s) for s in t.spins)
                       for t in self.radicals)
        return f"{self.coeff} {rad}"

    def to_json(self) -> dict:
        return {
            "coeff": str(self.coeff),
            "radicals": [list(t.key) for t in self.radicals],
        }
