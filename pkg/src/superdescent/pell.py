"""Continued fractions of sqrt(d), Pell equations, and the exact solvers for
d*y^2 = x^4 - 1 and d*y^2 = x^4 + 1.

Fundamental solutions grow like exp(period length), so the quartic solvers
first reduce the relevant convergents modulo a product of small primes and
only build the exact integers when every residue test passes. The residue
tests are necessary conditions for squareness, so skipping on failure is
exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .algebra import integer_nth_root
from .arith import factor, is_prime
from .errors import DigitBudgetExceeded, FactorizationTimeout, PerfectSquareInput

__all__ = [
    "PellFundamental",
    "QuarticPellSolutions",
    "continued_fraction_sqrt",
    "pell_fundamental",
    "negative_pell_fundamental",
    "lucas_s",
    "solve_quartic_minus",
    "solve_quartic_plus",
]

DEFAULT_DIGIT_BUDGET = 100_000


@dataclass(frozen=True)
class PellFundamental:
    d: int
    equation_sign: int
    x: int
    y: int
    cf_period: int

    def __post_init__(self):
        assert self.x * self.x - self.d * self.y * self.y == self.equation_sign


@dataclass(frozen=True)
class QuarticPellSolutions:
    d: int
    variant: str  # "minus" for x^4 - 1, "plus" for x^4 + 1
    solutions: tuple[tuple[int, int], ...] = ()
    complete: bool = True
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        sign = -1 if self.variant == "minus" else 1
        for x, y in self.solutions:
            assert self.d * y * y == x**4 + sign, (self.d, x, y)


def _check_d(d: int) -> int:
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    a0 = math.isqrt(d)
    if a0 * a0 == d:
        raise PerfectSquareInput(f"{d} is a perfect square")
    return a0


@lru_cache(maxsize=2048)
def _cf_sqrt(d: int) -> tuple[int, tuple[int, ...]]:
    a0 = _check_d(d)
    m, q, a = 0, 1, a0
    period = []
    while a != 2 * a0:
        m = q * a - m
        q = (d - m * m) // q
        a = (a0 + m) // q
        period.append(a)
    return a0, tuple(period)


def continued_fraction_sqrt(d: int) -> tuple[int, list[int]]:
    """``sqrt(d) = [a0; a1, ..., aL]`` with the minimal period ``a1..aL``."""
    a0, period = _cf_sqrt(d)
    return a0, list(period)


def _terms(a0: int, period: tuple[int, ...], index: int):
    yield a0
    L = len(period)
    for i in range(index):
        yield period[i % L]


def _digits_estimate(a0: int, period: tuple[int, ...], index: int) -> int:
    # p_n <= prod(a_i + 1), so this bounds the size of the numerator.
    logs = sum(math.log10(a + 1) for a in _terms(a0, period, index))
    return int(logs) + 1


def _convergent(a0: int, period: tuple[int, ...], index: int, mod: Optional[int] = None):
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    L = len(period)
    if mod is None:
        for i in range(index):
            a = period[i % L]
            p_prev, p = p, a * p + p_prev
            q_prev, q = q, a * q + q_prev
        return p, q
    p %= mod
    for i in range(index):
        a = period[i % L]
        p_prev, p = p, (a * p + p_prev) % mod
    return p, None


def _budget_check(a0, period, index, digit_budget):
    if digit_budget is None:
        return
    est = _digits_estimate(a0, period, index)
    if est > digit_budget:
        raise DigitBudgetExceeded(est, digit_budget)


def pell_fundamental(d: int, digit_budget: Optional[int] = None) -> PellFundamental:
    """Minimal positive solution of X^2 - d*Y^2 = 1."""
    a0, period = _cf_sqrt(d)
    L = len(period)
    index = L - 1 if L % 2 == 0 else 2 * L - 1
    _budget_check(a0, period, index, digit_budget)
    x, y = _convergent(a0, period, index)
    return PellFundamental(d, 1, x, y, L)


def negative_pell_fundamental(
    d: int, digit_budget: Optional[int] = None
) -> Optional[PellFundamental]:
    """Minimal positive solution of V^2 - d*U^2 = -1; None when the period is even."""
    a0, period = _cf_sqrt(d)
    L = len(period)
    if L % 2 == 0:
        return None
    _budget_check(a0, period, L - 1, digit_budget)
    x, y = _convergent(a0, period, L - 1)
    return PellFundamental(d, -1, x, y, L)


def _mat_mul(a, b, mod=None):
    (a11, a12), (a21, a22) = a
    (b11, b12), (b21, b22) = b
    out = (
        (a11 * b11 + a12 * b21, a11 * b12 + a12 * b22),
        (a21 * b11 + a22 * b21, a21 * b12 + a22 * b22),
    )
    if mod is not None:
        out = tuple(tuple(v % mod for v in row) for row in out)
    return out


def _lucas_s_matrix(n: int, v0: int, mod: Optional[int] = None) -> int:
    # (s_{k+1}, s_k) = M (s_k, s_{k-1}) with M = [[2 v0, 1], [1, 0]].
    if n == 0:
        return 1 if mod is None else 1 % mod
    result = ((1, 0), (0, 1))
    base = ((2 * v0, 1), (1, 0))
    if mod is not None:
        base = tuple(tuple(v % mod for v in row) for row in base)
    e = n - 1
    while e:
        if e & 1:
            result = _mat_mul(result, base, mod)
        base = _mat_mul(base, base, mod)
        e >>= 1
    s = result[0][0] * v0 + result[0][1]
    return s if mod is None else s % mod


def lucas_s(n: int, v0: int) -> int:
    """``s_n = (mu**n + lambda**n) / 2`` for ``mu = v0 + u0*sqrt(d)``, ``mu*lambda = -1``.

    Uses s_0 = 1, s_1 = v0, s_{n+1} = 2*v0*s_n + s_{n-1}.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n < 64:
        s_prev, s = 1, v0
        if n == 0:
            return 1
        for _ in range(n - 1):
            s_prev, s = s, 2 * v0 * s + s_prev
        return s
    return _lucas_s_matrix(n, v0)


# Residue sieve for squareness: a product of small odd primes and, per prime,
# the set of quadratic residues (0 included).
_SIEVE_PRIMES = tuple(q for q in range(3, 200) if is_prime(q))
_SIEVE_MOD = math.prod(_SIEVE_PRIMES)
_QR = {q: frozenset(r * r % q for r in range(q)) for q in _SIEVE_PRIMES}


def _maybe_square(residue: int) -> bool:
    return all(residue % q in _QR[q] for q in _SIEVE_PRIMES)


def _exact_y(x: int, d: int, sign: int) -> Optional[int]:
    num = x**4 + sign
    if num < 0 or num % d:
        return None
    return integer_nth_root(num // d, 2)


def solve_quartic_minus(d: int, digit_budget: Optional[int] = DEFAULT_DIGIT_BUDGET) -> QuarticPellSolutions:
    """All positive solutions of d*y^2 = x^4 - 1 for d >= 2.

    With (u, v) the fundamental solution of X^2 - d*Y^2 = 1, a solution has
    x = sqrt(u) or x = sqrt(2*u^2 - 1).
    """
    a0, period = _cf_sqrt(d)
    L = len(period)
    index = L - 1 if L % 2 == 0 else 2 * L - 1
    u_mod, _ = _convergent(a0, period, index, _SIEVE_MOD)
    first = _maybe_square(u_mod)
    second = _maybe_square((2 * u_mod * u_mod - 1) % _SIEVE_MOD)
    if not (first or second):
        return QuarticPellSolutions(d, "minus", (), True, ("residue sieve",))
    fund = pell_fundamental(d, digit_budget)
    u = fund.x
    sols = set()
    for cand in (u, 2 * u * u - 1):
        a = integer_nth_root(cand, 2)
        if a is not None and a >= 1:
            y = _exact_y(a, d, -1)
            if y is not None and y > 0:
                sols.add((a, y))
    return QuarticPellSolutions(d, "minus", tuple(sorted(sols)), True)


def _bounded_squarefree_part(n: int, limit: int) -> Optional[int]:
    """Squarefree part of n if it is at most ``limit``; None when it provably exceeds it."""
    A = 1
    m = n
    for q in _primes_upto(limit):
        if m % q == 0:
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            if e % 2:
                A *= q
        if A > limit:
            return None
    if m == 1 or integer_nth_root(m, 2) is not None:
        return A
    # m has an odd-exponent prime above ``limit``.
    return None


@lru_cache(maxsize=8)
def _primes_upto(n: int) -> tuple[int, ...]:
    if n < 2:
        return ()
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return tuple(i for i, f in enumerate(sieve) if f)


def solve_quartic_plus(d: int, digit_budget: Optional[int] = DEFAULT_DIGIT_BUDGET) -> QuarticPellSolutions:
    """All positive solutions of d*y^2 = x^4 + 1 for d >= 2.

    Requires a solution (v0, u0) of V^2 - d*U^2 = -1. With A the squarefree
    part of v0 the only candidate is x = sqrt(s_A); it is checked exactly.
    """
    neg = negative_pell_fundamental(d, digit_budget)
    if neg is None:
        return QuarticPellSolutions(d, "plus", (), True, ("negative Pell unsolvable",))
    v0 = neg.x
    log_mu = math.log10(2 * v0 + 1)
    try:
        A = 1
        for q, e in factor(v0).factors:
            if e % 2:
                A *= q
    except FactorizationTimeout:
        if digit_budget is None:
            raise
        limit = max(1, int(digit_budget / log_mu))
        A = _bounded_squarefree_part(v0, limit)
        if A is None:
            raise DigitBudgetExceeded(int(limit * log_mu) + 1, digit_budget) from None
    if not _maybe_square(_lucas_s_matrix(A, v0, _SIEVE_MOD)):
        return QuarticPellSolutions(d, "plus", (), True, ("residue sieve",))
    needed = int(A * log_mu) + 1
    if digit_budget is not None and needed > digit_budget:
        raise DigitBudgetExceeded(needed, digit_budget)
    s = lucas_s(A, v0)
    a = integer_nth_root(s, 2)
    if a is None:
        return QuarticPellSolutions(d, "plus", (), True)
    y = _exact_y(a, d, 1)
    if y is None:
        return QuarticPellSolutions(d, "plus", (), True, (f"s_{A} = {a}^2 fails d*y^2 = x^4+1",))
    return QuarticPellSolutions(d, "plus", ((a, y),), True)
