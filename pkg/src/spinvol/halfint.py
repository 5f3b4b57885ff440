"""Lossless half-integer angular momenta.

A spin j is stored as the integer 2j, so j = 0, 1/2, 1, 3/2, ... are all
exact and sums/differences of spins never touch floating point.  Values are
immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError


class HalfInt:
    """A half-integer stored as its doubled value.

    Supports exact +, -, comparison, hashing and conversion to float or
    Fraction.  Multiplication is only defined with plain integers (a spin
    times a spin is not a spin).
    """

    __slots__ = ("twice",)

    def __init__(self, twice):
        if not isinstance(twice, int):
            raise TypeError(f"twice must be int, got {type(twice).__name__}")
        object.__setattr__(self, "twice", twice)

    def __setattr__(self, name, value):
        raise AttributeError("HalfInt is immutable")

    # -- properties ---------------------------------------------------------

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def as_int(self) -> int:
        """This value as a plain int; raises if it is an odd half-integer."""
        if self.twice % 2:
            raise DomainError(f"{self} is not an integer")
        return self.twice // 2

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def casimir(self) -> Fraction:
        """j(j+1) as an exact Fraction."""
        return Fraction(self.twice * (self.twice + 2), 4)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _twice_of(other):
        if isinstance(other, HalfInt):
            return other.twice
        if isinstance(other, int):
            return 2 * other
        return None

    def __add__(self, other):
        t = self._twice_of(other)
        if t is None:
            return NotImplemented
        return HalfInt(self.twice + t)

    __radd__ = __add__

    def __sub__(self, other):
        t = self._twice_of(other)
        if t is None:
            return NotImplemented
        return HalfInt(self.twice - t)

    def __rsub__(self, other):
        t = self._twice_of(other)
        if t is None:
            return NotImplemented
        return HalfInt(t - self.twice)

    def __mul__(self, other):
        if isinstance(other, int):
            return HalfInt(self.twice * other)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return HalfInt(-self.twice)

    def __abs__(self):
        return HalfInt(abs(self.twice))

    # -- comparison / hashing ------------------------------------------------

    def __eq__(self, other):
        t = self._twice_of(other)
        return NotImplemented if t is None else self.twice == t

    def __lt__(self, other):
        t = self._twice_of(other)
        return NotImplemented if t is None else self.twice < t

    def __le__(self, other):
        t = self._twice_of(other)
        return NotImplemented if t is None else self.twice <= t

    def __gt__(self, other):
        t = self._twice_of(other)
        return NotImplemented if t is None else self.twice > t

    def __ge__(self, other):
        t = self._twice_of(other)
        return NotImplemented if t is None else self.twice >= t

    def __hash__(self):
        # hash-compatible with int and Fraction of equal value
        return hash(Fraction(self.twice, 2))

    # -- conversion / display -------------------------------------------------

    def __float__(self):
        return self.twice / 2.0

    def __str__(self):
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self):
        return f"HalfInt({self})"


def halfint(value) -> HalfInt:
    """Coerce an int, string, float or HalfInt to a HalfInt.

    Strings accept "3/2", "1.5" and "2".  Floats must be exact multiples
    of 1/2.
    """
    if isinstance(value, HalfInt):
        return value
    if isinstance(value, int):
        return HalfInt(2 * value)
    if isinstance(value, str):
        return parse_spin(value)
    if isinstance(value, Fraction):
        if value.denominator not in (1, 2):
            raise DomainError(f"{value} is not a half-integer")
        return HalfInt(value.numerator * (2 // value.denominator))
    if isinstance(value, float):
        t = 2.0 * value
        if t != int(t):
            raise DomainError(f"{value!r} is not a half-integer")
        return HalfInt(int(t))
    raise TypeError(f"cannot interpret {value!r} as a half-integer")


def parse_spin(text: str, twice: bool = False) -> HalfInt:
    """Parse a spin from a CLI-style token.

    Accepts "3/2", "1.5", "2"; with twice=True the token is read as the
    doubled integer value ("3" -> 3/2).
    """
    s = text.strip()
    try:
        if twice:
            return HalfInt(int(s))
        if "/" in s:
            num, den = s.split("/")
            f = Fraction(int(num), int(den))
            if f.denominator not in (1, 2):
                raise DomainError(f"{text!r} is not a half-integer")
            return HalfInt(f.numerator * (2 // f.denominator))
        if "." in s or "e" in s.lower():
            return halfint(float(s))
        return HalfInt(2 * int(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse spin {text!r}") from exc


def halfint_range(lo, hi) -> list[HalfInt]:
    """Inclusive list lo, lo+1, ..., hi (empty if hi < lo)."""
    lo, hi = halfint(lo), halfint(hi)
    return [HalfInt(t) for t in range(lo.twice, hi.twice + 1, 2)]
