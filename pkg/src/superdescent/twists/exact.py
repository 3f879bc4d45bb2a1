from __future__ import annotations

from typing import Optional

from ..errors import DigitBudgetExceeded
from ..pell import DEFAULT_DIGIT_BUDGET, solve_quartic_minus, solve_quartic_plus
from .equations import QUARTIC_MINUS, QUARTIC_PLUS, TwistEquation, TwistOutcome


def solve_twist_exact(
    t: TwistEquation, digit_budget: Optional[int] = DEFAULT_DIGIT_BUDGET
) -> Optional[TwistOutcome]:
    """Exact, complete solve for the quartic kinds; None for everything else.

    The x = +-1 solutions of d y^2 = x^4 - 1 (y = 0) are included for every d.
    A digit-budget overrun yields a skipped, incomplete outcome.
    """
    if t.kind not in (QUARTIC_MINUS, QUARTIC_PLUS):
        return None
    d = t.d
    xs: set[int] = set()
    notes: list[str] = []
    if t.kind == QUARTIC_MINUS:
        xs.update((-1, 1))
        if d <= 1:
            # x^4 - 1 = d y^2 <= 0 forces |x| <= 1
            xs.update(x for x in (-1, 0, 1) if t.direct_y(x) is not None)
        else:
            try:
                sols = solve_quartic_minus(d, digit_budget)
            except DigitBudgetExceeded as exc:
                return _skipped(t, xs, exc)
            xs.update(v for a, _ in sols.solutions for v in (a, -a))
            notes.extend(sols.notes)
    else:
        if d == 1:
            xs.add(0)
        elif d >= 2:
            try:
                sols = solve_quartic_plus(d, digit_budget)
            except DigitBudgetExceeded as exc:
                return _skipped(t, xs, exc)
            xs.update(v for a, _ in sols.solutions for v in (a, -a))
            notes.extend(sols.notes)
    return TwistOutcome(t, tuple(sorted(xs)), True, "exact", tuple(notes))


def _skipped(t: TwistEquation, xs: set[int], exc: DigitBudgetExceeded) -> TwistOutcome:
    return TwistOutcome(
        t,
        tuple(sorted(xs)),
        complete=False,
        backend="exact",
        diagnostics=(f"skipped (digit budget): {exc}",),
        status="skipped",
    )
