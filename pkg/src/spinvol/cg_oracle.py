"""Brute-force 6j oracle built from Clebsch-Gordan coefficients.

Reconstructs a 6j symbol from its recoupling definition: the overlap of
|(j1 j2) j12, j3; J M> with |j1, (j2 j3) j23; J M> summed over magnetic
quantum numbers, with every Clebsch-Gordan coefficient evaluated exactly
from its own single-sum formula.  Nothing here touches the Racah 6j sum, so
agreement with the fast backend is a genuine cross-check.

Each CG value is held as (rational) * sqrt(rational); term-by-term the
radicand is split into a square and a squarefree kernel so that the
magnetic sum collapses exactly.

Exponential in the spins; refuses anything above 5/2 by design.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import OracleBoundError
from .factored import FactorialProduct
from .sixj import SixJ

_MAX_TWICE = 5  # spins up to 5/2


def _tri_twice(ta, tb, tc) -> bool:
    return abs(ta - tb) <= tc <= ta + tb and (ta + tb + tc) % 2 == 0


@lru_cache(maxsize=None)
def cg_exact(tj1, tm1, tj2, tm2, tj, tm):
    """Exact Clebsch-Gordan coefficient <j1 m1 j2 m2|j m>.

    All arguments are doubled.  Returns (r, A) with the coefficient equal
    to r * sqrt(A.to_fraction()); (0, 1) encodes zero.
    """
    if (tm != tm1 + tm2 or not _tri_twice(tj1, tj2, tj)
            or abs(tm1) > tj1 or abs(tm2) > tj2 or abs(tm) > tj
            or (tj1 + tm1) % 2 or (tj2 + tm2) % 2 or (tj + tm) % 2):
        return Fraction(0), FactorialProduct.one()
    f = FactorialProduct.from_factorial
    radicand = FactorialProduct.from_integer(tj + 1)
    radicand = radicand * f((tj1 + tj2 - tj) // 2) * f((tj1 - tj2 + tj) // 2) \
        * f((-tj1 + tj2 + tj) // 2) / f((tj1 + tj2 + tj) // 2 + 1)
    for t in ((tj1 + tm1), (tj1 - tm1), (tj2 + tm2), (tj2 - tm2),
              (tj + tm), (tj - tm)):
        radicand = radicand * f(t // 2)
    fac = math.factorial
    k_lo = max(0, (tj2 - tj - tm1) // 2, (tj1 + tm2 - tj) // 2)
    k_hi = min((tj1 + tj2 - tj) // 2, (tj1 - tm1) // 2, (tj2 + tm2) // 2)
    acc = Fraction(0)
    for k in range(k_lo, k_hi + 1):
        den = (fac(k)
               * fac((tj1 + tj2 - tj) // 2 - k)
               * fac((tj1 - tm1) // 2 - k)
               * fac((tj2 + tm2) // 2 - k)
               * fac((tj - tj2 + tm1) // 2 + k)
               * fac((tj - tj1 - tm2) // 2 + k))
        acc += Fraction((-1) ** k, den)
    if acc == 0:
        return Fraction(0), FactorialProduct.one()
    return acc, radicand


def sixj_oracle_cg(s: SixJ) -> tuple[int, Fraction]:
    """Sign and exact square of a 6j symbol via the CG recoupling overlap.

    Returns (sign, square) with sign in {-1, +1}; a zero value reports
    (+1, 0).  Raises OracleBoundError above spins of 5/2.
    """
    tkey = s.twice_key
    if max(tkey) > _MAX_TWICE:
        raise OracleBoundError(
            f"CG oracle limited to spins <= {_MAX_TWICE}/2, got {s!r}")
    if s.is_trivial_zero():
        return 1, Fraction(0)
    tj1, tj2, tj12, tj3, tJ, tj23 = tkey
    tM = tJ  # the overlap is independent of M; the stretched choice is cheap
    kernels: dict[int, Fraction] = {}
    for tm1 in range(-tj1, tj1 + 1, 2):
        for tm2 in range(-tj2, tj2 + 1, 2):
            tm12 = tm1 + tm2
            if abs(tm12) > tj12:
                continue
            tm3 = tM - tm12
            if abs(tm3) > tj3:
                continue
            tm23 = tm2 + tm3
            if abs(tm23) > tj23:
                continue
            r1, a1 = cg_exact(tj1, tm1, tj2, tm2, tj12, tm12)
            if r1 == 0:
                continue
            r2, a2 = cg_exact(tj12, tm12, tj3, tm3, tJ, tM)
            if r2 == 0:
                continue
            r3, a3 = cg_exact(tj2, tm2, tj3, tm3, tj23, tm23)
            if r3 == 0:
                continue
            r4, a4 = cg_exact(tj1, tm1, tj23, tm23, tJ, tM)
            if r4 == 0:
                continue
            half, kernel = (a1 * a2 * a3 * a4).sqrt_split()
            contrib = r1 * r2 * r3 * r4 * half.to_fraction()
            kernels[kernel] = kernels.get(kernel, Fraction(0)) + contrib
    nonzero = {k: v for k, v in kernels.items() if v != 0}
    if not nonzero:
        return 1, Fraction(0)
    if len(nonzero) > 1:
        raise ArithmeticError(
            f"recoupling overlap did not collapse to one radical: {nonzero}")
    (kernel, coeff), = nonzero.items()
    phase_exp = (tj1 + tj2 + tj3 + tJ) // 2
    sign = (1 if coeff > 0 else -1) * (-1) ** phase_exp
    square = coeff * coeff * kernel / ((tj12 + 1) * (tj23 + 1))
    return sign, square
