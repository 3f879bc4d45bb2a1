"""Batch solves over the one-parameter families y^2 = (x^4 - 1) g_k(x)."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

from .algebra import IntegerPolynomial
from .descent import SolveConfig, solve_quartic_family
from .errors import CommonRoots
from .pell import DEFAULT_DIGIT_BUDGET

FAMILIES: dict[str, tuple[str, Callable[[int], list[int]]]] = {
    "x2kx1": ("x^2+kx+1", lambda k: [1, k, 1]),
    "x3kx21": ("x^3+kx^2+1", lambda k: [1, 0, k, 1]),
    "x3kx1": ("x^3+kx+1", lambda k: [1, k, 0, 1]),
}


@dataclass(frozen=True)
class TableRow:
    k: int
    points: tuple[tuple[int, int], ...]
    status: str  # ok | skipped (digit budget) | excluded (common roots)
    complete: bool

    @property
    def notable(self) -> bool:
        """Rows worth printing: points found, or something not certified."""
        return bool(self.points) or self.status != "ok" or not self.complete


def family_polynomial(family: str, k: int) -> IntegerPolynomial:
    try:
        return IntegerPolynomial(FAMILIES[family][1](k))
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None


def solve_row(family: str, k: int, digit_budget: int = DEFAULT_DIGIT_BUDGET) -> TableRow:
    g = family_polynomial(family, k)
    try:
        report = solve_quartic_family(g, "minus", SolveConfig(digit_budget=digit_budget))
    except CommonRoots:
        return TableRow(k, (), "excluded (common roots)", True)
    pts = tuple((pt.x, pt.y) for pt in report.positive_points)
    skipped = any(o.status == "skipped" for o in report.twist_outcomes)
    return TableRow(k, pts, "skipped (digit budget)" if skipped else "ok", report.complete)


def _solve_row_args(args):
    return solve_row(*args)


def reproduce_table(
    family: str,
    kmax: int,
    kmin: int = 2,
    digit_budget: int = DEFAULT_DIGIT_BUDGET,
    workers: Optional[int] = 1,
) -> list[TableRow]:
    """One row per k in [kmin, kmax], in k order regardless of worker count."""
    family_polynomial(family, kmin)
    jobs = [(family, k, digit_budget) for k in range(kmin, kmax + 1)]
    if workers is not None and workers <= 1:
        return [_solve_row_args(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_solve_row_args, jobs, chunksize=8))
