"""Wigner 6j symbols through three backends.

* exact: Racah single-sum over a common factored prefactor, carried out in
  arbitrary-precision rationals; the result is a RadicalValue whose radicals
  are the four triangle coefficients of the symbol.
* sweep: Schulten-Gordon style three-term recurrence in the third entry,
  two-sided with rescaling, anchored by the orthonormality sum and the sign
  of the stretched boundary value.
* float: plain Racah sum in mantissa/exponent arithmetic, usable up to spins
  of order 1e4 without overflow (accuracy limited by the alternating sum).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError
from .halfint import HalfInt, halfint, halfint_range
from .radical import RadicalValue, Triad, triangle_ok
from . import kernels


class SixJ:
    """A 6j symbol {j1 j2 j3; j4 j5 j6}.

    The four triads are (j1,j2,j3), (j1,j5,j6), (j4,j2,j6), (j4,j5,j3);
    if any of them violates the triangle rule the symbol is a trivial zero
    (still a legal value, since identity sums run over rectangular ranges).
    """

    __slots__ = ("entries",)

    def __init__(self, j1, j2, j3, j4, j5, j6):
        entries = tuple(halfint(j) for j in (j1, j2, j3, j4, j5, j6))
        for j in entries:
            if j.twice < 0:
                raise DomainError(f"negative spin {j} in 6j symbol")
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("SixJ is immutable")

    @property
    def twice_key(self) -> tuple[int, ...]:
        return tuple(j.twice for j in self.entries)

    def triads(self) -> tuple[Triad, Triad, Triad, Triad]:
        j1, j2, j3, j4, j5, j6 = self.entries
        return (Triad(j1, j2, j3), Triad(j1, j5, j6),
                Triad(j4, j2, j6), Triad(j4, j5, j3))

    def is_trivial_zero(self) -> bool:
        return not all(t.is_triangle() for t in self.triads())

    def symmetry_images(self) -> list["SixJ"]:
        """The 24 classically equivalent symbols (column permutations and
        upper/lower exchanges in any two columns)."""
        j1, j2, j3, j4, j5, j6 = self.entries
        cols = ((j1, j4), (j2, j5), (j3, j6))
        perms = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))
        flips = ((), (0, 1), (0, 2), (1, 2))
        out = []
        for p in perms:
            base = [cols[i] for i in p]
            for fl in flips:
                cur = [(c[1], c[0]) if i in fl else c for i, c in enumerate(base)]
                out.append(SixJ(cur[0][0], cur[1][0], cur[2][0],
                                cur[0][1], cur[1][1], cur[2][1]))
        return out

    def __eq__(self, other):
        return isinstance(other, SixJ) and self.twice_key == other.twice_key

    def __hash__(self):
        return hash(self.twice_key)

    def __repr__(self):
        j = self.entries
        return "{%s %s %s; %s %s %s}" % tuple(str(x) for x in j)


class SixJValue:
    """Exact value plus a double-precision hint derived from it."""

    __slots__ = ("exact", "float_hint")

    def __init__(self, exact: RadicalValue):
        object.__setattr__(self, "exact", exact)
        object.__setattr__(self, "float_hint", exact.to_float())

    def __setattr__(self, name, value):
        raise AttributeError("SixJValue is immutable")

    @property
    def is_zero(self) -> bool:
        return self.exact.is_zero

    def __repr__(self):
        return f"SixJValue({self.exact.describe()} ~ {self.float_hint:.15g})"


def _sum_bounds(tkey):
    """Triad sums S_i and opposite-pair sums Q_j of the Racah sum, as ints."""
    t1, t2, t3, t4, t5, t6 = tkey
    S = ((t1 + t2 + t3) // 2, (t1 + t5 + t6) // 2,
         (t4 + t2 + t6) // 2, (t4 + t5 + t3) // 2)
    Q = ((t1 + t2 + t4 + t5) // 2, (t2 + t3 + t5 + t6) // 2,
         (t3 + t1 + t6 + t4) // 2)
    return S, Q


def _racah_t_sum(S, Q) -> Fraction:
    """sum_t (-1)^t (t+1)! / [prod (t-S_i)! prod (Q_j-t)!], exact.

    Consecutive terms differ by a small-integer ratio, so the sum is built
    incrementally from the first term.
    """
    t_lo, t_hi = max(S), min(Q)
    f = math.factorial
    den = 1
    for s in S:
        den *= f(t_lo - s)
    for q in Q:
        den *= f(q - t_lo)
    cur = Fraction((-1) ** t_lo * f(t_lo + 1), den)
    acc = cur
    for t in range(t_lo, t_hi):
        num = (t + 2)
        for q in Q:
            num *= (q - t)
        den = 1
        for s in S:
            den *= (t + 1 - s)
        cur *= Fraction(-num, den)
        acc += cur
    return acc


@lru_cache(maxsize=None)
def _sixj_exact_cached(tkey) -> RadicalValue:
    s = SixJ(*(HalfInt(t) for t in tkey))
    if s.is_trivial_zero():
        return RadicalValue.zero()
    S, Q = _sum_bounds(tkey)
    return RadicalValue(_racah_t_sum(S, Q), s.triads())


def sixj_exact(s: SixJ) -> SixJValue:
    """Exact 6j value; trivial zeros return an exact zero."""
    return SixJValue(_sixj_exact_cached(s.twice_key))


def sixj_exact_cache_clear() -> None:
    _sixj_exact_cached.cache_clear()


# ---------------------------------------------------------------------------
# plain floating backend


def _ln_triangle_coeff_sq(ta, tb, tc) -> float:
    lg = math.lgamma
    return (lg((ta + tb - tc) // 2 + 1) + lg((ta - tb + tc) // 2 + 1)
            + lg((-ta + tb + tc) // 2 + 1) - lg((ta + tb + tc) // 2 + 2))


def sixj_float(s: SixJ) -> float:
    """Racah sum in floating point with mantissa/exponent tracking.

    No overflow up to spins of order 1e4; relative accuracy degrades with
    the cancellation inherent in the alternating sum, so prefer the exact
    or sweep backends when precision matters.
    """
    if s.is_trivial_zero():
        return 0.0
    tkey = s.twice_key
    S, Q = _sum_bounds(tkey)
    t_lo, t_hi = max(S), min(Q)
    lg = math.lgamma
    ln_terms = []
    for t in range(t_lo, t_hi + 1):
        v = lg(t + 2)
        for si in S:
            v -= lg(t - si + 1)
        for q in Q:
            v -= lg(q - t + 1)
        ln_terms.append(v)
    m = max(ln_terms)
    acc = 0.0
    for t, v in zip(range(t_lo, t_hi + 1), ln_terms):
        acc += (-1.0) ** t * math.exp(v - m)
    if acc == 0.0:
        return 0.0
    triads = [t.key for t in s.triads()]
    ln_pref = 0.5 * sum(_ln_triangle_coeff_sq(*k) for k in triads)
    ln_mag = m + ln_pref + math.log(abs(acc))
    # split into mantissa * 2**exp to survive |ln_mag| >> 700
    e2 = int(ln_mag / math.log(2.0))
    mant = math.copysign(math.exp(ln_mag - e2 * math.log(2.0)), acc)
    try:
        return math.ldexp(mant, e2)
    except OverflowError:
        return math.copysign(math.inf, mant)


# ---------------------------------------------------------------------------
# recurrence sweep backend


def _sweep_coeffs(a, b, c, d, z, xs):
    """E(x) and F(x) coefficient arrays of the three-term recurrence in the
    third entry of {a b x; c d z}."""
    fa, fb, fc, fd, fz = (float(a), float(b), float(c), float(d), float(z))
    x = np.asarray(xs, dtype=float)
    ca, cb, cc, cd = (fa * (fa + 1), fb * (fb + 1), fc * (fc + 1), fd * (fd + 1))
    cz = fz * (fz + 1)
    x2 = x * x
    E = np.sqrt(np.maximum(
        (x2 - (fa - fb) ** 2) * ((fa + fb + 1) ** 2 - x2)
        * (x2 - (fc - fd) ** 2) * ((fc + fd + 1) ** 2 - x2), 0.0))
    cx = x * (x + 1)
    F = (2 * x + 1) * (cx * (-cx + ca + cb)
                       + cc * (cx + ca - cb)
                       + cd * (cx - ca + cb)
                       - 2 * cx * cz)
    return E, F


def sixj_sweep_x(a, b, c, d, z) -> list[tuple[HalfInt, float]]:
    """All {a b x; c d z} over the admissible x range, by two-sided
    three-term recurrence with rescaling.

    Normalized with sum_x (2x+1)(2z+1) f(x)^2 = 1 and signed by the
    single-term stretched value at the top of the range.  Empty range
    returns an empty list.
    """
    a, b, c, d, z = (halfint(v) for v in (a, b, c, d, z))
    x_lo = max(abs(a - b), abs(c - d))
    x_hi = min(a + b, c + d)
    if x_lo > x_hi or (a + b + x_lo).twice % 2 or (c + d + x_lo).twice % 2:
        return []
    xs = halfint_range(x_lo, x_hi)
    n = len(xs)
    if not (triangle_ok(a, d, z) and triangle_ok(b, c, z)):
        return [(x, 0.0) for x in xs]
    tz = z.twice
    sign_top = -1.0 if ((a + b + c + d).as_int() % 2) else 1.0
    if n == 1:
        mag = 1.0 / math.sqrt((xs[0].twice + 1.0) * (tz + 1.0))
        return [(xs[0], sign_top * mag)]

    xf = np.array([float(x) for x in xs])
    E, F = _sweep_coeffs(a, b, c, d, z, xf)
    if float(x_lo) == 0.0:
        # a=b, c=d: the two-term start degenerates; seed with the closed-form
        # ratio f(1)/f(0) for {a a x; c c z}
        ca, cc, cz = (float(a) * (float(a) + 1), float(c) * (float(c) + 1),
                      float(z) * (float(z) + 1))
        seed_ratio = -(ca + cc - cz) / (2.0 * math.sqrt(ca * cc))
    else:
        seed_ratio = -F[0] / (xf[0] * E[1])
    f, top_sign = kernels.sweep_recurrence(E, F, xf, seed_ratio)
    norm = float(np.sum((2 * xf + 1) * (tz + 1.0) * f * f))
    f = f / math.sqrt(norm)
    # top_sign tracks sign(f[-1]) even when the tail underflows to zero
    if top_sign != sign_top:
        f = -f
    return list(zip(xs, f.tolist()))
