from __future__ import annotations

from functools import lru_cache

from ..algebra import IntegerPolynomial, evaluate, integer_nth_root, perfect_power_root
from .equations import TwistEquation, TwistOutcome


@lru_cache(maxsize=8)
def _values(coeffs: tuple[int, ...], height: int) -> tuple[tuple[int, int], ...]:
    f = IntegerPolynomial(coeffs)
    return tuple((x, evaluate(f, x)) for x in range(-height, height + 1))


def solve_twist_bounded(t: TwistEquation, height: int) -> TwistOutcome:
    """Scan the direct form ``d y^p = f(x)`` over ``|x| <= height``.

    Never complete: integer points beyond the height are not excluded.
    """
    if height < 1:
        raise ValueError("height must be >= 1")
    d, p = t.d, t.p
    found = []
    for x, v in _values(t.f.coeffs, height):
        if v % d:
            continue
        if perfect_power_root(v // d, p) is not None:
            found.append(x)
    return TwistOutcome(
        t,
        tuple(found),
        complete=False,
        backend="bounded",
        diagnostics=(f"|x| <= {height}",),
    )


def weierstrass_points_bounded(a2: int, a4: int, a6: int, height: int) -> list[tuple[int, int]]:
    """Integer points with y >= 0 on y^2 = x^3 + a2 x^2 + a4 x + a6, |x| <= height."""
    pts = []
    for x in range(-height, height + 1):
        v = ((x + a2) * x + a4) * x + a6
        if v < 0:
            continue
        y = integer_nth_root(v, 2)
        if y is not None:
            pts.append((x, y))
    return pts
