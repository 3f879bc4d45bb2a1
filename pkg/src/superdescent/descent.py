"""The three descent pipelines and report assembly.

Every pipeline has the same skeleton: compute the resultant constant c,
enumerate the twist coefficients d allowed by c, solve each twist
``d y^p = f(x)``, pool the x-values, and keep exactly those x for which
``f(x) g(x)`` is a p-th power.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional

from .algebra import (
    IntegerPolynomial,
    discriminant,
    evaluate,
    integer_roots,
    perfect_power_root,
    resultant,
)
from .arith import is_prime, omega, pfree_twist_coefficients, squarefree_divisors, tau
from .errors import (
    AdapterError,
    CommonRoots,
    NotBinomial,
    SingularCurve,
    UnsupportedShape,
    ZeroScale,
)
from .pell import DEFAULT_DIGIT_BUDGET
from .twists import (
    ExternalAdapterConfig,
    TwistCache,
    TwistEquation,
    TwistOutcome,
    build_dsquare_twist,
    build_elliptic_twist,
    build_thue_twist,
    cache_key,
    solve_twist_bounded,
    solve_twist_exact,
    solve_twist_external,
)
from .twists.equations import QUARTIC_MINUS, QUARTIC_PLUS, X4_MINUS_1, X4_PLUS_1

DEFAULT_HEIGHT = 10_000
BACKENDS = ("auto", "bounded", "exact", "external")


@dataclass(frozen=True)
class CurveProblem:
    """``D * y**p = f(x) * g(x)``."""

    p: int
    f: IntegerPolynomial
    g: IntegerPolynomial
    D: int = 1
    family_hint: Optional[str] = None  # None | "quartic_minus" | "quartic_plus"

    def rhs(self, x: int) -> int:
        return evaluate(self.f, x) * evaluate(self.g, x)

    def describe(self) -> str:
        lhs = f"y^{self.p}" if self.D == 1 else f"{self.D}*y^{self.p}"
        return f"{lhs} = ({self.f})*({self.g})"


@dataclass(frozen=True, order=True)
class CurvePoint:
    x: int
    y: int


@dataclass(frozen=True)
class SolveConfig:
    height: int = DEFAULT_HEIGHT
    backend: str = "auto"
    adapter: Optional[ExternalAdapterConfig] = None
    cache: Optional[TwistCache] = None
    digit_budget: int = DEFAULT_DIGIT_BUDGET
    workers: int = 1

    def __post_init__(self):
        if self.height < 1:
            raise ValueError("height must be >= 1")
        if self.backend not in BACKENDS:
            raise ValueError(f"unknown backend {self.backend!r}")


@dataclass
class DescentReport:
    problem: CurveProblem
    pipeline: str
    c: int
    divisor_set: list[int]
    twist_outcomes: list[TwistOutcome]
    points: list[CurvePoint]
    complete: bool
    bound: Optional[int] = None
    height: Optional[int] = None
    errors: list[str] = field(default_factory=list)

    def __post_init__(self):
        for pt in self.points:
            assert self.problem.D * pt.y**self.problem.p == self.problem.rhs(pt.x), pt

    @property
    def output_points(self) -> list[CurvePoint]:
        """Points with y >= 0, sorted by x."""
        return sorted(pt for pt in self.points if pt.y >= 0)

    @property
    def positive_points(self) -> list[CurvePoint]:
        return [pt for pt in self.output_points if pt.y > 0]

    @property
    def bound_respected(self) -> Optional[bool]:
        if self.bound is None:
            return None
        return len(self.positive_points) <= self.bound

    @property
    def completeness_label(self) -> str:
        if self.errors:
            return "partial (solver errors)"
        if self.complete:
            return "certified complete"
        if any(o.status == "skipped" for o in self.twist_outcomes):
            return "incomplete (twists skipped)"
        if self.height is not None and any(o.backend == "bounded" for o in self.twist_outcomes):
            return f"complete up to height {self.height}"
        return "completeness not certified"


def normalize(problem: CurveProblem) -> CurveProblem:
    """Fold the scale D into g: ``(D y)^p = f * (D^(p-1) g)``.

    The returned problem has D = 1; a point (x, y') on it maps back to
    (x, y'/D), and is discarded when D does not divide y'.
    """
    if problem.D == 0:
        raise ZeroScale("D must be nonzero")
    if problem.D == 1:
        return problem
    return replace(problem, g=problem.g * problem.D ** (problem.p - 1), D=1)


def back_map(y_prime: int, D: int) -> Optional[int]:
    if D == 0:
        raise ZeroScale("D must be nonzero")
    return y_prime // D if y_prime % D == 0 else None


def lift_and_verify(x_candidates: Iterable[int], problem: CurveProblem) -> list[CurvePoint]:
    """Keep the x with D*y^p = f(x)*g(x) solvable; one point per x, sorted."""
    pts = set()
    for x in set(x_candidates):
        v = problem.rhs(x)
        if v % problem.D:
            continue
        y = perfect_power_root(v // problem.D, problem.p)
        if y is None:
            continue
        if problem.p % 2 == 0:
            y = abs(y)
        assert problem.D * y**problem.p == v
        pts.add(CurvePoint(x, y))
    return sorted(pts)


def _binomial_parts(f: IntegerPolynomial, p: int) -> Optional[tuple[int, int]]:
    """(A, B) if f = A x^p + B with A*B != 0."""
    c = f.coeffs
    if f.degree != p or c[0] == 0 or any(c[1:p]):
        return None
    return c[p], c[0]


def theoretical_bound(problem: CurveProblem) -> Optional[int]:
    """Upper bound on the number of y > 0 points when a closed form is known.

    * ``y^p = (a x^p +- 1)(c x^m + b)``, p >= 3, m >= 2: ``2 tau(|res(f, g)|)``.
    * ``y^2 = (x^4 - 1) g``: ``2^(omega(N) + 2)``; ``y^2 = (x^4 + 1) g``:
      ``2^(omega(N) + 1)``, N = |res(f, g)|.
    """
    prob = normalize(problem)
    f, g, p = prob.f, prob.g, prob.p
    if p >= 3:
        parts = _binomial_parts(f, p)
        if parts is None or abs(parts[1]) != 1 or g.degree < 2:
            return None
        gc = g.coeffs
        if gc[0] == 0 or any(gc[1:-1]):
            return None
        c = abs(resultant(f, g))
        return 2 * tau(c) if c else None
    if p == 2 and f in (X4_MINUS_1, X4_PLUS_1):
        N = abs(resultant(f, g))
        if N == 0:
            return None
        extra = 2 if f == X4_MINUS_1 else 1
        return 2 ** (omega(N) + extra)
    return None


def _pick_backend(t: TwistEquation, backend: str) -> str:
    """auto/exact: exact where the twist has an exact solver, else bounded."""
    if backend in ("auto", "exact"):
        return "exact" if t.kind in (QUARTIC_MINUS, QUARTIC_PLUS) else "bounded"
    return backend


def _solve_one(t: TwistEquation, cfg: SolveConfig) -> TwistOutcome:
    backend = _pick_backend(t, cfg.backend)
    key = None
    if cfg.cache is not None:
        key = cache_key(t, backend, cfg.height)
        hit = cfg.cache.get(key)
        if hit is not None:
            return replace(hit, diagnostics=hit.diagnostics + ("cache hit",))
    try:
        if backend == "exact":
            out = solve_twist_exact(t, cfg.digit_budget)
        elif backend == "external":
            if cfg.adapter is None:
                raise AdapterError("external backend selected but no adapter configured")
            out = solve_twist_external(t, cfg.adapter)
        else:
            out = solve_twist_bounded(t, cfg.height)
    except AdapterError as exc:
        return TwistOutcome(
            t, (), False, "external", (f"{type(exc).__name__}: {exc}",), status="error"
        )
    if cfg.cache is not None and out.status == "solved":
        cfg.cache.put(key, out)
    return out


def _solve_all(twists: list[TwistEquation], cfg: SolveConfig) -> list[TwistOutcome]:
    if cfg.workers > 1 and len(twists) > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            outcomes = list(pool.map(lambda t: _solve_one(t, cfg), twists))
    else:
        outcomes = [_solve_one(t, cfg) for t in twists]
    return sorted(outcomes, key=lambda o: (abs(o.twist.d), o.twist.d > 0))


def _assemble(
    problem: CurveProblem,
    pipeline: str,
    c: int,
    divisors: list[int],
    outcomes: list[TwistOutcome],
    cfg: SolveConfig,
    work: CurveProblem,
) -> DescentReport:
    candidates: set[int] = set()
    for o in outcomes:
        candidates.update(o.x_candidates)
        candidates.update(o.extra_candidates)
    # y = 0 points come straight from the integer roots of f and g.
    for poly in (work.f, work.g):
        if poly.degree >= 1:
            candidates.update(integer_roots(poly))
    points = lift_and_verify(candidates, problem)
    errors = [f"d={o.twist.d}: {'; '.join(o.diagnostics)}" for o in outcomes if o.status == "error"]
    used_bounded = any(o.backend == "bounded" for o in outcomes)
    return DescentReport(
        problem=problem,
        pipeline=pipeline,
        c=c,
        divisor_set=divisors,
        twist_outcomes=outcomes,
        points=points,
        complete=all(o.complete for o in outcomes),
        bound=theoretical_bound(problem),
        height=cfg.height if used_bounded else None,
        errors=errors,
    )


def _nonzero_resultant(f: IntegerPolynomial, g: IntegerPolynomial) -> int:
    if g.is_zero():
        raise CommonRoots("g is the zero polynomial")
    if g.degree == 0:
        # constant g: res(f, g) = g0^deg f
        c = g.coeffs[0] ** f.degree
    else:
        c = resultant(f, g)
    if c == 0:
        raise CommonRoots(f"{f} and {g} share a root")
    return abs(c)


def solve_superelliptic(
    f: IntegerPolynomial,
    g: IntegerPolynomial,
    p: int,
    config: Optional[SolveConfig] = None,
    D: int = 1,
) -> DescentReport:
    """Integer points on ``D y^p = (A x^p + B) g(x)`` for an odd prime p.

    Twists run over every p-free d whose radical divides c = |res(f, g)|.
    """
    cfg = config or SolveConfig()
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    parts = _binomial_parts(f, p)
    if parts is None:
        raise NotBinomial(f"f must be A*x^{p} + B with A*B != 0, got {f}")
    problem = CurveProblem(p, f, g, D)
    work = normalize(problem)
    c = _nonzero_resultant(work.f, work.g)
    divisors = pfree_twist_coefficients(c, p)
    A, B = parts
    twists = [build_thue_twist(A, B, p, d) for d in divisors]
    outcomes = _solve_all(twists, cfg)
    return _assemble(problem, "superelliptic", c, divisors, outcomes, cfg, work)


def solve_hyperelliptic(
    f: IntegerPolynomial,
    g: IntegerPolynomial,
    config: Optional[SolveConfig] = None,
    D: int = 1,
) -> DescentReport:
    """Integer points on ``D y^2 = f(x) g(x)`` with f a cubic or quartic.

    Monic nonsingular cubics give elliptic twists (E_d available to an
    adapter); other cubics and quartics give plain ``d y^2 = f(x)`` twists.
    """
    cfg = config or SolveConfig()
    if f.degree not in (3, 4):
        raise UnsupportedShape(f"f must be a cubic or quartic, got degree {f.degree}")
    if discriminant(f) == 0:
        raise SingularCurve(f"{f} has a repeated root")
    problem = CurveProblem(2, f, g, D)
    work = normalize(problem)
    c = _nonzero_resultant(work.f, work.g)
    divisors = squarefree_divisors(c, signed=True)
    if f.degree == 3 and f.leading == 1:
        twists = [build_elliptic_twist(f, d) for d in divisors]
    else:
        twists = [build_dsquare_twist(f, d) for d in divisors]
    outcomes = _solve_all(twists, cfg)
    return _assemble(problem, "hyperelliptic", c, divisors, outcomes, cfg, work)


def solve_quartic_family(
    g: IntegerPolynomial,
    variant: str,
    config: Optional[SolveConfig] = None,
) -> DescentReport:
    """Integer points on ``y^2 = (x^4 - 1) g(x)`` (minus) or ``(x^4 + 1) g(x)`` (plus).

    Every twist ``d y^2 = x^4 -+ 1`` is solved exactly, so the report is
    certified complete unless a digit budget forced a skip.
    """
    cfg = config or SolveConfig()
    if variant not in ("minus", "plus"):
        raise ValueError("variant must be 'minus' or 'plus'")
    f = X4_MINUS_1 if variant == "minus" else X4_PLUS_1
    problem = CurveProblem(2, f, g, 1, family_hint=f"quartic_{variant}")
    N = _nonzero_resultant(f, g)
    divisors = squarefree_divisors(N, signed=True)
    twists = [build_dsquare_twist(f, d) for d in divisors]
    if cfg.backend == "bounded":
        outcomes = _solve_all(twists, cfg)
    else:
        outcomes = _solve_all(twists, replace(cfg, backend="exact"))
    return _assemble(problem, f"quartic_{variant}", N, divisors, outcomes, cfg, problem)


def solve(problem: CurveProblem, config: Optional[SolveConfig] = None) -> DescentReport:
    """Dispatch a CurveProblem to the matching pipeline."""
    if problem.family_hint in ("quartic_minus", "quartic_plus"):
        if problem.D != 1:
            raise UnsupportedShape("the quartic families take D = 1")
        return solve_quartic_family(problem.g, problem.family_hint.split("_")[1], config)
    if problem.p == 2:
        return solve_hyperelliptic(problem.f, problem.g, config, problem.D)
    return solve_superelliptic(problem.f, problem.g, problem.p, config, problem.D)
