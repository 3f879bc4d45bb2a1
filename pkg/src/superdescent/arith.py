"""Integer factorization and the divisor sets that index twists."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Optional

from .errors import FactorizationTimeout, ZeroInput

__all__ = [
    "Factorization",
    "is_prime",
    "factor",
    "divisors",
    "squarefree_divisors",
    "pfree_twist_coefficients",
    "squarefree_part",
    "omega",
    "tau",
    "radical",
    "DEFAULT_RHO_BUDGET",
]

TRIAL_BOUND = 1 << 12
# Enough Brent iterations for an 80-bit semiprime with balanced factors.
DEFAULT_RHO_BUDGET = 4_000_000

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# The bases above are a proof of primality below this bound.
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    sieve = bytearray([1]) * TRIAL_BOUND
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(TRIAL_BOUND) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _miller_rabin(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below ~3.3e24, 25 bases above."""
    if n < 2:
        return False
    for q in _small_primes()[:60]:
        if n % q == 0:
            return n == q
    bases = _MR_BASES
    if n >= _MR_DETERMINISTIC_LIMIT:
        bases = _MR_BASES + (43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)
    return all(_miller_rabin(n, a) for a in bases)


def _brent(n: int, c: int, budget: list[int]) -> Optional[int]:
    """One Pollard-Brent run; returns a nontrivial factor or None."""
    y, r, q, g = 2, 1, 1, 1
    m = 128
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        budget[0] -= r
        if budget[0] <= 0 and g == 1:
            raise FactorizationTimeout(f"Pollard-rho budget exhausted on {n}")
        r *= 2
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


def _split(n: int, budget: list[int], out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = math.isqrt(n)
    if r * r == n:
        _split(r, budget, out)
        _split(r, budget, out)
        return
    c = 1
    while True:
        g = _brent(n, c, budget)
        if g is not None:
            break
        c += 1
    _split(g, budget, out)
    _split(n // g, budget, out)


@dataclass(frozen=True)
class Factorization:
    sign: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        v = self.sign
        for q, e in self.factors:
            v *= q**e
        return v

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.factors)


def factor(n: int, budget: int = DEFAULT_RHO_BUDGET) -> Factorization:
    """Complete prime factorization of a nonzero integer.

    Trial division up to TRIAL_BOUND, then Pollard-Brent with polynomial
    constants 1, 2, ... (so results are reproducible). ``budget`` caps the
    total number of rho iterations.
    """
    if n == 0:
        raise ZeroInput("cannot factor 0")
    return _factor_cached(n, budget)


@lru_cache(maxsize=4096)
def _factor_cached(n: int, budget: int) -> Factorization:
    sign = -1 if n < 0 else 1
    m = abs(n)
    found: dict[int, int] = {}
    for q in _small_primes():
        if q * q > m:
            break
        if m % q == 0:
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            found[q] = e
    if m > 1:
        _split(m, [budget], found)
    return Factorization(sign, tuple(sorted(found.items())))


def divisors(n: int) -> list[int]:
    """Positive divisors of |n|, ascending."""
    fac = factor(n)
    out = [1]
    for q, e in fac.factors:
        out = [d * q**i for d in out for i in range(e + 1)]
    return sorted(out)


def squarefree_divisors(n: int, signed: bool = False) -> list[int]:
    primes = factor(n).primes
    out = [1]
    for q in primes:
        out += [d * q for d in out]
    if signed:
        out += [-d for d in out]
    return sorted(out)


def pfree_twist_coefficients(c: int, p: int) -> list[int]:
    """Signed p-free integers whose radical divides c.

    Each prime of c appears with exponent 0..p-1. For p = 2 this is exactly
    the signed squarefree divisors of c.
    """
    primes = factor(c).primes
    values = []
    for exps in product(range(p), repeat=len(primes)):
        d = 1
        for q, e in zip(primes, exps):
            d *= q**e
        values += [d, -d]
    return sorted(values, key=lambda d: (abs(d), d > 0))


def squarefree_part(n: int) -> int:
    """The squarefree A with n = A * m**2."""
    if n < 1:
        raise ValueError("squarefree_part needs n >= 1")
    out = 1
    for q, e in factor(n).factors:
        if e % 2:
            out *= q
    return out


def omega(n: int) -> int:
    return len(factor(n).factors)


def tau(n: int) -> int:
    return math.prod(e + 1 for _, e in factor(n).factors)


def radical(n: int) -> int:
    return math.prod(factor(n).primes)
