"""Exact univariate polynomials over the integers.

Coefficients are stored in ascending order: ``coeffs[k]`` multiplies ``x**k``.
Everything here works on Python ints, so there is no overflow anywhere.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import NegativeEvenPower, ZeroPolynomial

__all__ = [
    "IntegerPolynomial",
    "evaluate",
    "resultant",
    "coprime_over_closure",
    "discriminant",
    "integer_nth_root",
    "perfect_power_root",
    "parse_polynomial",
    "integer_roots",
]


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntegerPolynomial:
    """Dense polynomial with integer coefficients in ascending degree order.

    The zero polynomial is the empty tuple; otherwise the highest stored
    coefficient is nonzero.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntegerPolynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: int) -> int:
        return evaluate(self, x)

    def __add__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntegerPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    def __neg__(self) -> "IntegerPolynomial":
        return IntegerPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntegerPolynomial":
        if isinstance(other, int):
            return IntegerPolynomial(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntegerPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntegerPolynomial(out)

    __rmul__ = __mul__

    def derivative(self) -> "IntegerPolynomial":
        return IntegerPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                body = ("" if a == 1 else str(a)) + ("x" if k == 1 else f"x^{k}")
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f"{sign}{body}"
        return text


def evaluate(p: IntegerPolynomial, x: int) -> int:
    """Horner evaluation, exact."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def _bareiss_det(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def sylvester_matrix(p: IntegerPolynomial, q: IntegerPolynomial) -> list[list[int]]:
    m, n = p.degree, q.degree
    size = m + n
    pd = list(reversed(p.coeffs))
    qd = list(reversed(q.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + pd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + qd + [0] * (size - n - 1 - i))
    return rows


def resultant(p: IntegerPolynomial, q: IntegerPolynomial) -> int:
    """Sylvester resultant ``res_x(p, q)``.

    Convention: ``res(p, q) = lc(p)**deg(q) * prod(q(r) for r in roots(p))``,
    so ``res(x, x - 5) == -5``.
    """
    if p.is_zero() or q.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial is undefined")
    return _bareiss_det(sylvester_matrix(p, q))


def coprime_over_closure(p: IntegerPolynomial, q: IntegerPolynomial) -> bool:
    return resultant(p, q) != 0


def discriminant(p: IntegerPolynomial) -> int:
    n = p.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    r = resultant(p, p.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * r // p.leading


@lru_cache(maxsize=None)
def _power_residue_filter(k: int) -> tuple[int, bytes]:
    """Modulus M and a table marking the k-th power residues mod M."""
    moduli = []
    q = k + 1
    prod = 1
    while prod < 20000:
        if q % k == 1 and all(q % s for s in range(2, math.isqrt(q) + 1)):
            moduli.append(q)
            prod *= q
        q += 1
    table = bytearray(prod)
    for r in range(prod):
        table[pow(r, k, prod)] = 1
    return prod, bytes(table)


def integer_nth_root(n: int, k: int) -> Optional[int]:
    """Return r >= 0 with r**k == n, or None when n is not a perfect k-th power."""
    if n < 0 or k < 2:
        raise ValueError("integer_nth_root needs n >= 0 and k >= 2")
    if n < 2:
        return n
    if k == 2:
        r = math.isqrt(n)
        return r if r * r == n else None
    mod, table = _power_residue_filter(k)
    if not table[n % mod]:
        return None
    bits = n.bit_length()
    if bits <= 150:
        r = int(round(n ** (1.0 / k)))
    else:
        r = 1 << ((bits + k - 1) // k)
        while True:
            s = ((k - 1) * r + n // r ** (k - 1)) // k
            if s >= r:
                break
            r = s
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**k == n:
            return cand
    return None


def perfect_power_root(n: int, k: int, *, strict: bool = False) -> Optional[int]:
    """Signed k-th root of n, or None.

    Negative n with even k has no root; that is reported as None unless
    ``strict`` is set, in which case NegativeEvenPower is raised.
    """
    if n >= 0:
        return integer_nth_root(n, k)
    if k % 2 == 0:
        if strict:
            raise NegativeEvenPower(f"{n} is negative and {k} is even")
        return None
    r = integer_nth_root(-n, k)
    return None if r is None else -r


def integer_roots(p: IntegerPolynomial) -> list[int]:
    """All integer roots of a nonzero polynomial, ascending."""
    from .arith import divisors

    if p.is_zero():
        raise ZeroPolynomial("every integer is a root of the zero polynomial")
    coeffs = p.coeffs
    roots = []
    shift = 0
    while coeffs[shift] == 0:
        shift += 1
    if shift:
        roots.append(0)
    if len(coeffs) - shift > 1:
        for d in divisors(coeffs[shift]):
            for r in (d, -d):
                if evaluate(p, r) == 0:
                    roots.append(r)
    return sorted(set(roots))


_TERM = re.compile(r"([+-]?)(\d*)\*?(x(?:\^(\d+))?)?$")


def parse_polynomial(text: str) -> IntegerPolynomial:
    """Parse ``[1,1,0,1]`` (ascending coefficients) or ``x^3+x+1``."""
    s = text.strip()
    if s.startswith("["):
        data = json.loads(s)
        if not isinstance(data, list) or not all(isinstance(c, (int, str)) for c in data):
            raise ValueError(f"bad coefficient list: {text!r}")
        return IntegerPolynomial(int(c) for c in data)
    s = s.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    pieces = re.findall(r"[+-]?[^+-]+", s)
    if "".join(pieces) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, int] = {}
    for piece in pieces:
        m = _TERM.match(piece)
        if not m or (not m.group(2) and not m.group(3)):
            raise ValueError(f"cannot parse term {piece!r} in {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        c = int(m.group(2)) if m.group(2) else 1
        if m.group(3) is None:
            k = 0
        else:
            k = int(m.group(4)) if m.group(4) else 1
        coeffs[k] = coeffs.get(k, 0) + sign * c
    top = max(coeffs)
    return IntegerPolynomial(coeffs.get(i, 0) for i in range(top + 1))


def poly_from_roots(roots: Sequence[int], lead: int = 1) -> IntegerPolynomial:
    out = IntegerPolynomial([lead])
    for r in roots:
        out = out * IntegerPolynomial([-r, 1])
    return out
