from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from ..algebra import IntegerPolynomial, discriminant, evaluate, perfect_power_root
from ..errors import NotMonicCubic, SingularCurve

ELLIPTIC_CUBIC = "elliptic_cubic"
GENERIC_DSQUARE = "generic_dsquare"
BINOMIAL_THUE = "binomial_thue"
QUARTIC_MINUS = "quartic_minus"
QUARTIC_PLUS = "quartic_plus"
KINDS = (ELLIPTIC_CUBIC, GENERIC_DSQUARE, BINOMIAL_THUE, QUARTIC_MINUS, QUARTIC_PLUS)

X4_MINUS_1 = IntegerPolynomial([-1, 0, 0, 0, 1])
X4_PLUS_1 = IntegerPolynomial([1, 0, 0, 0, 1])


@dataclass(frozen=True)
class TwistEquation:
    """One descended equation ``d * y**p = f(x)``.

    ``weierstrass`` holds ``(A*d, B*d**2, C*d**3)`` for elliptic twists, the
    curve ``y^2 = x^3 + A d x^2 + B d^2 x + C d^3`` that receives the direct
    form under ``(x, y) -> (d x, d^2 y)``. ``thue`` holds ``(A, B)`` when
    ``f = A x^p + B``.
    """

    kind: str
    d: int
    p: int
    f: IntegerPolynomial
    weierstrass: Optional[tuple[int, int, int]] = None
    thue: Optional[tuple[int, int]] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown twist kind {self.kind!r}")
        if self.d == 0:
            raise ValueError("twist coefficient d must be nonzero")

    def direct_y(self, x: int) -> Optional[int]:
        """An integer y with d*y^p = f(x), or None."""
        v = evaluate(self.f, x)
        if v % self.d:
            return None
        return perfect_power_root(v // self.d, self.p)

    def request(self) -> dict:
        """The adapter request object for this twist."""
        if self.kind == ELLIPTIC_CUBIC:
            a2, a4, a6 = self.weierstrass
            return {"kind": "elliptic", "a1": 0, "a2": a2, "a3": 0, "a4": a4, "a6": a6}
        if self.kind == BINOMIAL_THUE:
            A, B = self.thue
            return {"kind": "thue", "p": self.p, "lhs_coeff": self.d, "rhs": [A, B]}
        return {"kind": "dsquare", "d": self.d, "f": list(self.f.coeffs)}

    def request_line(self) -> str:
        return encode_line(self.request())

    def describe(self) -> str:
        lhs = f"{self.d}*y^{self.p}" if self.d != 1 else f"y^{self.p}"
        return f"{lhs} = {self.f}"


def _encode_ints(obj):
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return obj if -(2**63) <= obj < 2**63 else str(obj)
    if isinstance(obj, dict):
        return {k: _encode_ints(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode_ints(v) for v in obj]
    return obj


def encode_line(obj) -> str:
    """Canonical one-line JSON, ints beyond 64 bits as decimal strings."""
    return json.dumps(_encode_ints(obj), sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class TwistOutcome:
    twist: TwistEquation
    x_candidates: tuple[int, ...]
    complete: bool
    backend: str
    diagnostics: tuple[str, ...] = ()
    # E_d abscissae reported by an adapter, kept unreduced; not verified on
    # the direct form, the final lift filters them.
    extra_candidates: tuple[int, ...] = ()
    status: str = "solved"  # solved | skipped | error

    def __post_init__(self):
        for x in self.x_candidates:
            if self.twist.direct_y(x) is None:
                raise AssertionError(f"x={x} does not satisfy {self.twist.describe()}")


def _check_monic_cubic(f: IntegerPolynomial) -> None:
    if f.degree != 3 or f.leading != 1:
        raise NotMonicCubic(f"expected a monic cubic, got {f}")
    if discriminant(f) == 0:
        raise SingularCurve(f"{f} has a repeated root")


def build_elliptic_twist(f: IntegerPolynomial, d: int) -> TwistEquation:
    """Twist ``d y^2 = f(x)`` of a monic nonsingular cubic, with its E_d."""
    _check_monic_cubic(f)
    C, B, A = f.coeffs[:3]
    return TwistEquation(ELLIPTIC_CUBIC, d, 2, f, weierstrass=(A * d, B * d * d, C * d**3))


def build_dsquare_twist(f: IntegerPolynomial, d: int) -> TwistEquation:
    if f == X4_MINUS_1:
        return TwistEquation(QUARTIC_MINUS, d, 2, f)
    if f == X4_PLUS_1:
        return TwistEquation(QUARTIC_PLUS, d, 2, f)
    return TwistEquation(GENERIC_DSQUARE, d, 2, f)


def build_thue_twist(A: int, B: int, p: int, d: int) -> TwistEquation:
    f = IntegerPolynomial([B] + [0] * (p - 1) + [A])
    return TwistEquation(BINOMIAL_THUE, d, p, f, thue=(A, B))


def twist_to_dict(t: TwistEquation) -> dict:
    return {
        "kind": t.kind,
        "d": t.d,
        "p": t.p,
        "f": list(t.f.coeffs),
        "weierstrass": list(t.weierstrass) if t.weierstrass else None,
        "thue": list(t.thue) if t.thue else None,
    }


def twist_from_dict(data: dict) -> TwistEquation:
    w = data.get("weierstrass")
    th = data.get("thue")
    return TwistEquation(
        data["kind"],
        int(data["d"]),
        int(data["p"]),
        IntegerPolynomial(int(c) for c in data["f"]),
        weierstrass=tuple(int(v) for v in w) if w else None,
        thue=tuple(int(v) for v in th) if th else None,
    )


def outcome_to_dict(o: TwistOutcome) -> dict:
    return {
        "twist": twist_to_dict(o.twist),
        "x_candidates": list(o.x_candidates),
        "extra_candidates": list(o.extra_candidates),
        "complete": o.complete,
        "backend": o.backend,
        "diagnostics": list(o.diagnostics),
        "status": o.status,
    }


def outcome_from_dict(data: dict) -> TwistOutcome:
    return TwistOutcome(
        twist=twist_from_dict(data["twist"]),
        x_candidates=tuple(int(x) for x in data["x_candidates"]),
        complete=bool(data["complete"]),
        backend=str(data["backend"]),
        diagnostics=tuple(data.get("diagnostics", ())),
        extra_candidates=tuple(int(x) for x in data.get("extra_candidates", ())),
        status=str(data.get("status", "solved")),
    )
