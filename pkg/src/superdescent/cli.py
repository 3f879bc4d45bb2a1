"""Command-line front end.

Exit status: 0 on success (also when no points exist), 1 on usage or input
errors, 2 on solver errors (adapter failure, timeout, factorization budget);
partial results are still printed in the last case.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import parse_polynomial
from .descent import DEFAULT_HEIGHT, SolveConfig, solve_hyperelliptic, solve_quartic_family, solve_superelliptic
from .errors import (
    AdapterError,
    CommonRoots,
    DescentError,
    DigitBudgetExceeded,
    FactorizationTimeout,
    NotBinomial,
    NotMonicCubic,
    PerfectSquareInput,
    SingularCurve,
    UnsupportedShape,
    ZeroScale,
)
from .pell import (
    DEFAULT_DIGIT_BUDGET,
    continued_fraction_sqrt,
    negative_pell_fundamental,
    pell_fundamental,
    solve_quartic_minus,
    solve_quartic_plus,
)
from .report import FORMATS, emit_report, emit_table
from .tables import FAMILIES, reproduce_table
from .twists import ExternalAdapterConfig, TwistCache

INPUT_ERRORS = (
    CommonRoots,
    NotBinomial,
    NotMonicCubic,
    SingularCurve,
    UnsupportedShape,
    ZeroScale,
    PerfectSquareInput,
)


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    height: int = DEFAULT_HEIGHT
    backend: str = "auto"
    adapter_path: Optional[str] = None
    cache_path: Optional[str] = None
    format: str = "text"
    digit_budget: int = DEFAULT_DIGIT_BUDGET
    timeout_seconds: Optional[float] = None
    workers: int = 1

    def __post_init__(self):
        if self.height < 1:
            raise UsageError("--height must be >= 1")
        if self.digit_budget < 10:
            raise UsageError("--digit-budget must be >= 10")
        if self.backend == "external" and not self.adapter_path:
            raise UsageError("--backend external needs --adapter or $SUPERDESCENT_ADAPTER")

    def solve_config(self) -> SolveConfig:
        adapter = None
        if self.adapter_path:
            adapter = ExternalAdapterConfig.from_string(self.adapter_path, self.timeout_seconds)
        cache = TwistCache(self.cache_path) if self.cache_path else None
        return SolveConfig(
            height=self.height,
            backend=self.backend,
            adapter=adapter,
            cache=cache,
            digit_budget=self.digit_budget,
            workers=self.workers,
        )


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--height", type=int, default=DEFAULT_HEIGHT, help="scan bound for bounded twists")
    common.add_argument("--backend", choices=("auto", "bounded", "exact", "external"), default="auto")
    common.add_argument("--adapter", default=os.environ.get("SUPERDESCENT_ADAPTER"), help="external solver command")
    common.add_argument("--cache", help="path of the persistent twist cache")
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--digit-budget", type=int, default=DEFAULT_DIGIT_BUDGET)
    common.add_argument("--timeout", type=float, help="seconds allowed per adapter call")
    common.add_argument("--workers", type=int, default=1)

    parser = _Parser(prog="superdescent", description="Integer points on y^p = f(x) g(x) by descent.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("super", parents=[common], help="y^p = (A x^p + B) g(x), p odd prime")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--f", required=True)
    sp.add_argument("--g", required=True)
    sp.add_argument("--D", type=int, default=1)

    hp = sub.add_parser("hyper", parents=[common], help="D y^2 = f(x) g(x), f cubic or quartic")
    hp.add_argument("--f", required=True)
    hp.add_argument("--g", required=True)
    hp.add_argument("--D", type=int, default=1)

    qp = sub.add_parser("quartic", parents=[common], help="y^2 = (x^4 -+ 1) g(x)")
    qp.add_argument("--variant", choices=("minus", "plus"), required=True)
    qp.add_argument("--g", required=True)

    tp = sub.add_parser("tables", parents=[common], help="run a family y^2 = (x^4-1) g_k(x) over k")
    tp.add_argument("--family", choices=sorted(FAMILIES), required=True)
    tp.add_argument("--kmin", type=int, default=2)
    tp.add_argument("--kmax", type=int, required=True)

    pp = sub.add_parser("pell", parents=[common], help="Pell data and d y^2 = x^4 -+ 1 for one d")
    pp.add_argument("--d", type=int, required=True)
    return parser


def _poly(text: str):
    try:
        return parse_polynomial(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _pell_report(d: int, cfg: RunConfig) -> bytes:
    a0, period = continued_fraction_sqrt(d)
    out: dict = {"d": d, "cf": {"a0": a0, "period": period}}
    try:
        fund = pell_fundamental(d, cfg.digit_budget)
        out["pell"] = [fund.x, fund.y]
    except DigitBudgetExceeded as exc:
        out["pell"] = f"skipped (digit budget): {exc}"
    try:
        neg = negative_pell_fundamental(d, cfg.digit_budget)
        out["negative_pell"] = [neg.x, neg.y] if neg else None
    except DigitBudgetExceeded as exc:
        out["negative_pell"] = f"skipped (digit budget): {exc}"
    for name, fn in (("quartic_minus", solve_quartic_minus), ("quartic_plus", solve_quartic_plus)):
        try:
            out[name] = [list(s) for s in fn(d, cfg.digit_budget).solutions]
        except DigitBudgetExceeded as exc:
            out[name] = f"skipped (digit budget): {exc}"
    if cfg.format == "json":
        from .report import _s

        return (json.dumps(_s(out), separators=(",", ":")) + "\n").encode()
    lines = [
        f"d = {d}",
        f"sqrt(d) = [{a0}; ({', '.join(map(str, period))})], period {len(period)}",
        f"X^2 - dY^2 = 1: {out['pell']}",
        f"X^2 - dY^2 = -1: {out['negative_pell']}",
        f"d y^2 = x^4 - 1: {out['quartic_minus']}",
        f"d y^2 = x^4 + 1: {out['quartic_plus']}",
    ]
    return ("\n".join(lines) + "\n").encode()


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    out = stdout if stdout is not None else sys.stdout.buffer
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = RunConfig(
            command=args.command,
            height=args.height,
            backend=args.backend,
            adapter_path=args.adapter,
            cache_path=args.cache,
            format=args.format,
            digit_budget=args.digit_budget,
            timeout_seconds=args.timeout,
            workers=args.workers,
        )
        if cfg.command == "tables":
            if args.kmax < args.kmin:
                raise UsageError("--kmax must be >= --kmin")
            rows = reproduce_table(args.family, args.kmax, args.kmin, cfg.digit_budget, cfg.workers)
            out.write(emit_table(args.family, rows, cfg.format))
            return 0
        if cfg.command == "pell":
            out.write(_pell_report(args.d, cfg))
            return 0
        scfg = cfg.solve_config()
        if cfg.command == "super":
            report = solve_superelliptic(_poly(args.f), _poly(args.g), args.p, scfg, D=args.D)
        elif cfg.command == "hyper":
            report = solve_hyperelliptic(_poly(args.f), _poly(args.g), scfg, D=args.D)
        else:
            report = solve_quartic_family(_poly(args.g), args.variant, scfg)
    except UsageError as exc:
        print(f"superdescent: error: {exc}", file=sys.stderr)
        return 1
    except INPUT_ERRORS as exc:
        print(f"superdescent: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (FactorizationTimeout, AdapterError, DescentError) as exc:
        print(f"superdescent: solver error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"superdescent: error: {exc}", file=sys.stderr)
        return 1
    out.write(emit_report(report, cfg.format))
    return 2 if report.errors else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
