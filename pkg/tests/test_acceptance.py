"""Acceptance criteria 1-11, one test and one PASS/FAIL line each.

Run ``pytest tests/test_acceptance.py -v -s`` to see the lines inline; they are
also collected in the terminal summary.
"""

import math
import random
import time

import pytest
import sympy

from helpers import poly, scan_points
from superdescent.algebra import IntegerPolynomial, discriminant, evaluate, poly_from_roots, resultant
from superdescent.arith import squarefree_divisors, tau
from superdescent.descent import SolveConfig, solve_hyperelliptic, solve_quartic_family, solve_superelliptic
from superdescent.pell import (
    continued_fraction_sqrt,
    negative_pell_fundamental,
    pell_fundamental,
    solve_quartic_minus,
    solve_quartic_plus,
)
from superdescent.tables import reproduce_table
from test_pell import BRUTE_Y_CAP, brute_pell_y, squarefree, sympy_min

P = IntegerPolynomial


def pts(report):
    return {(pt.x, pt.y) for pt in report.output_points}


def positive(report):
    return {(pt.x, pt.y) for pt in report.positive_points}


def table_points(rows):
    return {r.k: list(r.points) for r in rows if r.points}


# --- 1 -------------------------------------------------------------------

SUPER_GOLDEN = [
    ("y^3 = (x^3+691)(x^2-17)", poly(1, 0, 0, 691), poly(1, 0, -17), 3, {(13, 76)}),
    ("y^3 = (x^3+625)(x+1)", poly(1, 0, 0, 625), poly(1, 1), 3, {(-10, 15), (-1, 0), (15, 40)}),
    ("y^5 = (x^5-724)(x+2)", poly(1, 0, 0, 0, 0, -724), poly(1, 2), 5, {(-2, 0), (5, 7)}),
]


def test_criterion_01_superelliptic_golden(accept):
    bad = []
    for name, f, g, p, expected in SUPER_GOLDEN:
        t0 = time.perf_counter()
        got = pts(solve_superelliptic(f, g, p))
        dt = time.perf_counter() - t0
        if got != expected or dt >= 10:
            bad.append(f"{name}: {sorted(got)} in {dt:.1f}s")
    accept(1, "superelliptic golden set", not bad, "; ".join(bad))
    assert not bad


# --- 2 -------------------------------------------------------------------

HYPER_GOLDEN = [
    ("x^3+x+1 | x^4+2x^3-3x^2+4x+4", poly(1, 0, 1, 1), poly(1, 2, -3, 4, 4), {(-1, 2), (0, 2), (-2, 12), (3, 62)}),
    ("x^4+x^2+2 | 2x^2-1", poly(1, 0, 1, 0, 2), poly(2, 0, -1), {(-1, 4), (1, 4)}),
    ("x(x^2-1600) | x^2-1", poly_from_roots([0, 40, -40]), poly(1, 0, -1), {(-25, 3900)}),
    ("x(x-1)(x-5) | (x+1)(x-4)", poly_from_roots([0, 1, 5]), poly_from_roots([-1, 4]), {(2, 6), (9, 120)}),
    ("x(x-1)(x-2) | (x+40)(x+4)(x-4)(x-7)", poly_from_roots([0, 1, 2]), poly_from_roots([-40, -4, 4, 7]), {(-7, 2772), (16, 20160)}),
]


def test_criterion_02_hyperelliptic_golden(accept):
    bad = []
    for name, f, g, expected in HYPER_GOLDEN:
        t0 = time.perf_counter()
        got = positive(solve_hyperelliptic(f, g, SolveConfig(height=10_000, backend="bounded")))
        dt = time.perf_counter() - t0
        if got != expected or dt >= 60:
            bad.append(f"{name}: expected {sorted(expected)}, got {sorted(got)} in {dt:.1f}s")
    accept(2, "hyperelliptic golden set", not bad, "; ".join(bad))
    assert not bad


# --- 3-5 -------------------------------------------------------------------

X2KX1_ROWS = {
    5: [(2, 15)],
    26: [(5, 312)],
    65: [(2, 45), (5, 468)],
    101: [(10, 3333)],
    185: [(2, 75)],
    290: [(17, 20880)],
    365: [(2, 105)],
    377: [(5, 1092)],
    494: [(5, 1248)],
    605: [(2, 135)],
    677: [(26, 91395)],
    905: [(2, 165)],
}

X3KX21_ROWS = {9: [(5, 468)], 19: [(-5, 468)]}

X3KX1_ROWS = {
    3: [(2, 15)],
    6: [(5, 312)],
    11: [(10, 3333)],
    18: [(17, 20880)],
    27: [(21, 91395)],
    38: [(37, 312360)],
    45: [(5, 468)],
    51: [(50, 892857)],
    63: [(2, 45)],
    66: [(65, 2231328)],
    83: [(82, 5023575)],
    102: [(82, 5023575)],
    123: [(122, 20139405)],
    146: [(145, 36837552)],
    168: [(41, 462840)],
    171: [(170, 64246923)],
    183: [(2, 75)],
    197: [(197, 107581320)],
}
X3KX1_RECOMPUTE = (102, 168)


def test_criterion_03_table_1(accept):
    t0 = time.perf_counter()
    rows = reproduce_table("x2kx1", 1000, workers=4)
    dt = time.perf_counter() - t0
    got = table_points(rows)
    ok = got == X2KX1_ROWS and dt < 1800
    diff = {k: got.get(k) for k in set(got) | set(X2KX1_ROWS) if got.get(k) != X2KX1_ROWS.get(k)}
    accept(3, "table y^2=(x^4-1)(x^2+kx+1), 1<k<=1000", ok, f"{dt:.1f}s" + (f", mismatches {diff}" if diff else ""))
    assert ok


def test_criterion_04_table_2(accept):
    rows = reproduce_table("x3kx21", 100, workers=4)
    got = table_points(rows)
    skipped = [r.k for r in rows if r.status == "skipped (digit budget)"]
    ok = got == X3KX21_ROWS
    note = f"skipped k: {skipped}" if skipped else "no digit-budget skips"
    accept(4, "table y^2=(x^4-1)(x^3+kx^2+1), 1<k<=100", ok, note if ok else f"got {got}; {note}")
    assert ok


def test_criterion_05_table_3(accept):
    rows = reproduce_table("x3kx1", 200, workers=4)
    got = table_points(rows)
    checked = {k: v for k, v in X3KX1_ROWS.items() if k not in X3KX1_RECOMPUTE}
    mismatched = {k: (v, got.get(k)) for k, v in checked.items() if got.get(k) != v}
    recomputed = {k: got.get(k) for k in X3KX1_RECOMPUTE}
    unlisted = {k: v for k, v in got.items() if k not in X3KX1_ROWS}
    detail = f"recomputed {recomputed}"
    if mismatched:
        detail += f"; listed vs computed {mismatched}"
    if unlisted:
        detail += f"; computed rows absent from the listing {unlisted}"
    ok = not mismatched
    accept(5, "table y^2=(x^4-1)(x^3+kx+1), 1<k<=200", ok, detail)
    assert ok


# --- 6 -------------------------------------------------------------------


def test_criterion_06_quartic_plus_binomials(accept):
    allowed = {(-1, 0), (-1, 2), (1, 2), (0, 1)}
    bad = []
    for n in (1, 2, 3, 5, 6, 7, 9, 10, 11, 13, 14, 15):
        g = P([1] + [0] * (n - 1) + [1])
        t0 = time.perf_counter()
        r = solve_quartic_family(g, "plus")
        dt = time.perf_counter() - t0
        if not pts(r) <= allowed or not r.complete or dt >= 1:
            bad.append(f"n={n}: {sorted(pts(r))}, complete={r.complete}, {dt:.2f}s")
    accept(6, "quartic plus with g = x^n + 1", not bad, "; ".join(bad))
    assert not bad


# --- 7 -------------------------------------------------------------------


def test_criterion_07_parametric_family(accept):
    bad = []
    for n in range(1, 11):
        k = n * n + 2
        point = (n * n + 1, (n**4 + 2 * n * n + 2) * (n * n + 2) * n)
        r = solve_quartic_family(P([1, k, 0, 1]), "minus")
        if point not in positive(r):
            bad.append(f"n={n}")
    accept(7, "k = n^2+2 family point", not bad, ", ".join(bad))
    assert not bad


# --- 8 -------------------------------------------------------------------


def test_criterion_08_bound_suite(accept):
    rng = random.Random(20240801)
    nonzero = [v for v in range(-5, 6) if v]
    instances = bound_fail = c_fail = 0
    examples = []
    while instances < 50:
        alpha, beta, gamma = (rng.choice(nonzero) for _ in range(3))
        p, m, s = rng.choice([3, 5]), rng.choice([2, 3]), rng.choice([1, -1])
        f = P([s] + [0] * (p - 1) + [alpha])
        g = P([beta] + [0] * (m - 1) + [gamma])
        res = resultant(f, g)
        if res == 0:
            continue
        instances += 1
        c = -(alpha**m) * beta**p - s * gamma**p
        r = solve_superelliptic(f, g, p, SolveConfig(height=1000))
        count = len(r.positive_points)
        if c == 0 or count > 2 * tau(abs(c)):
            bound_fail += 1
        if abs(c) != abs(res):
            c_fail += 1
            if len(examples) < 3:
                examples.append(f"alpha={alpha} beta={beta} gamma={gamma} p={p} m={m} sign={s:+d}: c={c}, res={res}")
        assert r.bound is None or count <= r.bound
    ok = bound_fail == 0 and c_fail == 0
    detail = f"{instances} instances, bound violations {bound_fail}, closed form != |res| in {c_fail}"
    if examples:
        detail += "; e.g. " + "; ".join(examples)
    accept(8, "bound 2 tau(c) with the closed-form c", ok, detail)
    assert ok


# --- 9 -------------------------------------------------------------------


def _random_curve(rng):
    r = lambda: rng.randint(-10, 10)
    shape = rng.choice(["super3", "super5", "cubic", "quartic", "minus", "plus"])
    if shape.startswith("super"):
        p = int(shape[-1])
        A, B = rng.choice([v for v in range(-10, 11) if v]), rng.choice([v for v in range(-10, 11) if v])
        f = P([B] + [0] * (p - 1) + [A])
        g = P([r() for _ in range(rng.randint(2, 3))])
        return shape, f, g, p
    if shape == "cubic":
        f = P([r(), r(), r(), 1])
        return shape, f, P([r() for _ in range(rng.randint(2, 4))]), 2
    if shape == "quartic":
        f = P([r(), r(), r(), r(), rng.choice([v for v in range(-10, 11) if v])])
        return shape, f, P([r() for _ in range(rng.randint(2, 3))]), 2
    f = P([-1 if shape == "minus" else 1, 0, 0, 0, 1])
    return shape, f, P([r() for _ in range(rng.randint(2, 4))]), 2


def test_criterion_09_scan_oracle(accept):
    rng = random.Random(9)
    done = 0
    missing = []
    while done < 100:
        shape, f, g, p = _random_curve(rng)
        if g.degree < 1 or resultant(f, g) == 0 or (p == 2 and discriminant(f) == 0):
            continue
        cfg = SolveConfig(height=1000)
        if shape in ("minus", "plus"):
            r = solve_quartic_family(g, shape, cfg)
        elif shape.startswith("super"):
            r = solve_superelliptic(f, g, p, cfg)
        else:
            r = solve_hyperelliptic(f, g, cfg)
        done += 1
        truth = {pt for pt in scan_points(f, g, p, 500) if pt[1] >= 0}
        lost = truth - pts(r)
        if lost:
            missing.append(f"{shape} f={f} g={g}: {sorted(lost)}")
    accept(9, "100 random curves vs |x| <= 500 scan", not missing, "; ".join(missing[:3]))
    assert not missing


# --- 10 ------------------------------------------------------------------


def test_criterion_10_pell_suite(accept):
    problems = []
    for d in range(2, 201):
        if not squarefree(d):
            continue
        fund = pell_fundamental(d)
        if sympy_min(d, 1) != (fund.x, fund.y):
            problems.append(f"pell d={d}")
        if fund.y <= BRUTE_Y_CAP and brute_pell_y(d, 1, fund.y) != (fund.x, fund.y):
            problems.append(f"scan d={d}")
        neg = negative_pell_fundamental(d)
        odd = len(continued_fraction_sqrt(d)[1]) % 2 == 1
        brute_neg = brute_pell_y(d, -1, fund.y) if fund.y <= BRUTE_Y_CAP else sympy_min(d, -1)
        if (neg is not None) != odd or (brute_neg is not None) != odd:
            problems.append(f"negative pell d={d}")
    fourth = [x**4 for x in range(1, 1001)]
    for d in range(2, 501):
        if not squarefree(d):
            continue
        for sign, solver in ((-1, solve_quartic_minus), (1, solve_quartic_plus)):
            truth = []
            for x, x4 in enumerate(fourth, start=1):
                q, rem = divmod(x4 + sign, d)
                if rem == 0 and q > 0 and math.isqrt(q) ** 2 == q:
                    truth.append((x, math.isqrt(q)))
            if [s for s in solver(d).solutions if s[0] <= 1000] != truth:
                problems.append(f"quartic d={d} sign={sign}")
    double = []
    for d in range(2, 2001):
        if not squarefree(d):
            continue
        u = pell_fundamental(d).x
        if math.isqrt(u) ** 2 == u and math.isqrt(2 * u * u - 1) ** 2 == 2 * u * u - 1:
            double.append(d)
    if double != [1785]:
        problems.append(f"double integrality at {double}")
    accept(10, "Pell suite", not problems, "; ".join(problems[:5]))
    assert not problems


# --- 11 ------------------------------------------------------------------


def test_criterion_11_divisor_counts(accept):
    problems = []
    for n in range(-10_000, 10_001):
        if n == 0:
            continue
        w = len(sympy.primefactors(n))
        if len(squarefree_divisors(n, signed=True)) != 2 ** (w + 1):
            problems.append(f"n={n}")
    rng = random.Random(11)
    for _ in range(500):
        roots = [rng.randint(-20, 20) for _ in range(3)]
        lead = rng.choice([v for v in range(-5, 6) if v])
        f = poly_from_roots(roots, lead=lead)
        g = P([rng.randint(-20, 20) for _ in range(rng.randint(1, 5))])
        if g.is_zero():
            g = P([1])
        expected = lead ** max(g.degree, 0) * math.prod(evaluate(g, a) for a in roots)
        if resultant(f, g) != expected:
            problems.append(f"res {roots} {g}")
    accept(11, "divisor counts and resultant product formula", not problems, "; ".join(problems[:5]))
    assert not problems
