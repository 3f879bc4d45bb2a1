"""Serialization of descent reports and table runs (text, json, csv)."""

from __future__ import annotations

import csv
import io
import json

from .descent import DescentReport
from .tables import FAMILIES, TableRow
from .twists import outcome_to_dict

FORMATS = ("text", "json", "csv")


def _s(v):
    """Decimal-string every integer (bools and None pass through)."""
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, dict):
        return {k: _s(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_s(x) for x in v]
    return v


def _point_sources(report: DescentReport) -> dict[int, list[int]]:
    sources: dict[int, list[int]] = {}
    for o in report.twist_outcomes:
        for x in (*o.x_candidates, *o.extra_candidates):
            sources.setdefault(x, []).append(o.twist.d)
    return sources


def report_to_dict(report: DescentReport) -> dict:
    prob = report.problem
    return {
        "pipeline": report.pipeline,
        "problem": {
            "p": prob.p,
            "f": list(prob.f.coeffs),
            "g": list(prob.g.coeffs),
            "D": prob.D,
            "family_hint": prob.family_hint,
        },
        "c": report.c,
        "divisor_set": report.divisor_set,
        "twists": [outcome_to_dict(o) for o in report.twist_outcomes],
        "points": [[pt.x, pt.y] for pt in report.output_points],
        "complete": report.complete,
        "completeness": report.completeness_label,
        "bound": report.bound,
        "height": report.height,
        "errors": report.errors,
    }


def emit_report(report: DescentReport, fmt: str = "text") -> bytes:
    if fmt == "json":
        return (json.dumps(_s(report_to_dict(report)), separators=(",", ":")) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["x", "y", "d_source", "complete"])
        sources = _point_sources(report)
        for pt in report.output_points:
            ds = sources.get(pt.x)
            w.writerow([pt.x, pt.y, ";".join(map(str, ds)) if ds else "root", report.complete])
        return buf.getvalue().encode()
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    prob = report.problem
    lines = [
        f"curve: {prob.describe()}",
        f"pipeline: {report.pipeline}",
        f"resultant constant c = {report.c}",
        f"twist coefficients ({len(report.divisor_set)}): {report.divisor_set}",
    ]
    for o in report.twist_outcomes:
        flag = "complete" if o.complete else "incomplete"
        notes = f" [{'; '.join(o.diagnostics)}]" if o.diagnostics else ""
        lines.append(
            f"  d={o.twist.d:>6} {o.backend:<8} {flag:<10} {o.status:<7} x: {list(o.x_candidates)}{notes}"
        )
    pts = ", ".join(f"({pt.x}, {pt.y})" for pt in report.output_points) or "none"
    lines.append(f"points (y >= 0): {pts}")
    if report.bound is not None:
        lines.append(f"bound on points with y > 0: {report.bound}")
    lines.append(f"status: {report.completeness_label}")
    for err in report.errors:
        lines.append(f"error: {err}")
    return ("\n".join(lines) + "\n").encode()


def emit_table(family: str, rows: list[TableRow], fmt: str = "text") -> bytes:
    shown = [r for r in rows if r.notable]
    if fmt == "json":
        doc = {
            "family": family,
            "g": FAMILIES[family][0],
            "k_range": [rows[0].k, rows[-1].k] if rows else None,
            "rows": [
                {"k": r.k, "points": [list(p) for p in r.points], "status": r.status, "complete": r.complete}
                for r in shown
            ],
        }
        return (json.dumps(_s(doc), separators=(",", ":")) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "x", "y", "status", "complete"])
        for r in shown:
            if r.points:
                for x, y in r.points:
                    w.writerow([r.k, x, y, r.status, r.complete])
            else:
                w.writerow([r.k, "", "", r.status, r.complete])
        return buf.getvalue().encode()
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    head = f"y^2 = (x^4-1)({FAMILIES[family][0]})"
    if rows:
        head += f", {rows[0].k} <= k <= {rows[-1].k}"
    lines = [head, f"{'k':>6}  integer points (x, y), y > 0"]
    for r in shown:
        body = ", ".join(f"({x},{y})" for x, y in r.points) or "-"
        if r.status != "ok":
            body += f"  [{r.status}]"
        lines.append(f"{r.k:>6}  {body}")
    return ("\n".join(lines) + "\n").encode()
