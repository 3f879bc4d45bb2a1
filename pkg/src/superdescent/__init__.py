"""Integer points on y^p = f(x) g(x) by descent to twists indexed by
divisors of the resultant of f and g."""

from .algebra import IntegerPolynomial, parse_polynomial, resultant
from .descent import (
    CurvePoint,
    CurveProblem,
    DescentReport,
    SolveConfig,
    lift_and_verify,
    normalize,
    solve,
    solve_hyperelliptic,
    solve_quartic_family,
    solve_superelliptic,
    theoretical_bound,
)

__version__ = "0.1.0"

__all__ = [
    "IntegerPolynomial",
    "parse_polynomial",
    "resultant",
    "CurvePoint",
    "CurveProblem",
    "DescentReport",
    "SolveConfig",
    "lift_and_verify",
    "normalize",
    "solve",
    "solve_hyperelliptic",
    "solve_quartic_family",
    "solve_superelliptic",
    "theoretical_bound",
]
