"""Prime-factorized factorial products.

Ratios of factorials dominate the cost of exact recoupling coefficients.
Keeping them as prime-exponent vectors makes products and quotients cheap
integer-vector additions; big integers only materialize on final conversion
to a Fraction.

The prime and factorial-exponent tables grow lazily and are append-only:
growth happens under a lock, completed entries are read without blocking.
"""

from __future__ import annotations

import threading
from fractions import Fraction

_lock = threading.Lock()
_primes = [2, 3, 5, 7, 11, 13]
_sieve_limit = 14
# _fact_exps[n] = tuple of exponents of the primes dividing n!, aligned
# with _primes; filled on demand.
_fact_exps: dict[int, tuple[int, ...]] = {}


def _grow_primes(limit: int) -> None:
    global _sieve_limit, _primes
    with _lock:
        if limit <= _sieve_limit:
            return
        limit = max(limit, 2 * _sieve_limit)
        sieve = bytearray([1]) * (limit + 1)
        sieve[0:2] = b"\x00\x00"
        for p in range(2, int(limit**0.5) + 1):
            if sieve[p]:
                sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
        _primes = [i for i, flag in enumerate(sieve) if flag]
        _sieve_limit = limit


def primes_upto(n: int) -> list[int]:
    if n > _sieve_limit:
        _grow_primes(n)
    primes = _primes
    # bisect-free: primes are dense enough that slicing via scan is fine
    import bisect

    return primes[: bisect.bisect_right(primes, n)]


def _legendre(n: int, p: int) -> int:
    """Exponent of prime p in n!."""
    e = 0
    q = p
    while q <= n:
        e += n // q
        q *= p
    return e


def factorial_exponents(n: int) -> dict[int, int]:
    """Prime exponent map of n! (cached)."""
    if n < 0:
        raise ValueError("factorial of negative integer")
    cached = _fact_exps.get(n)
    if cached is None:
        ps = primes_upto(n)
        cached = tuple(_legendre(n, p) for p in ps)
        with _lock:
            _fact_exps.setdefault(n, cached)
    ps = primes_upto(n)
    return {p: e for p, e in zip(ps, cached) if e}


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of a positive integer by trial division."""
    if n <= 0:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    m = n
    for p in primes_upto(int(n**0.5) + 1):
        if p * p > m:
            break
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


class FactorialProduct:
    """A ratio of factorial products kept as prime exponents, prod p^e."""

    __slots__ = ("exponents",)

    def __init__(self, exponents: dict[int, int] | None = None):
        self.exponents = {p: e for p, e in (exponents or {}).items() if e}

    @classmethod
    def one(cls) -> "FactorialProduct":
        return cls()

    @classmethod
    def from_factorial(cls, n: int) -> "FactorialProduct":
        return cls(factorial_exponents(n))

    @classmethod
    def from_integer(cls, n: int) -> "FactorialProduct":
        return cls(factorize(n))

    def __mul__(self, other: "FactorialProduct") -> "FactorialProduct":
        e = dict(self.exponents)
        for p, k in other.exponents.items():
            e[p] = e.get(p, 0) + k
        return FactorialProduct(e)

    def __truediv__(self, other: "FactorialProduct") -> "FactorialProduct":
        e = dict(self.exponents)
        for p, k in other.exponents.items():
            e[p] = e.get(p, 0) - k
        return FactorialProduct(e)

    def __pow__(self, k: int) -> "FactorialProduct":
        return FactorialProduct({p: e * k for p, e in self.exponents.items()})

    def __eq__(self, other):
        if not isinstance(other, FactorialProduct):
            return NotImplemented
        return self.exponents == other.exponents

    def __hash__(self):
        return hash(frozenset(self.exponents.items()))

    def to_fraction(self) -> Fraction:
        num = den = 1
        for p, e in self.exponents.items():
            if e > 0:
                num *= p**e
            else:
                den *= p**-e
        return Fraction(num, den)

    def sqrt_split(self) -> tuple["FactorialProduct", int]:
        """Split the square root into (exact factored part, squarefree kernel).

        sqrt(self) == half.to_fraction() * sqrt(kernel), with kernel a
        squarefree positive integer.
        """
        half: dict[int, int] = {}
        kernel = 1
        for p, e in self.exponents.items():
            q, r = divmod(e, 2)  # floor division keeps negative exps exact
            if q:
                half[p] = q
            if r:
                kernel *= p
        return FactorialProduct(half), kernel

    def __repr__(self):
        if not self.exponents:
            return "FactorialProduct(1)"
        body = " ".join(f"{p}^{e}" for p, e in sorted(self.exponents.items()))
        return f"FactorialProduct({body})"
