"""Independent scan oracles shared by the descent and acceptance tests."""

from superdescent.algebra import IntegerPolynomial


def kth_root(n, k):
    if n < 0:
        if k % 2 == 0:
            return None
        r = kth_root(-n, k)
        return None if r is None else -r
    lo, hi = 0, 1
    while hi**k <= n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo if lo**k == n else None


def scan_points(f, g, p, bound, D=1):
    """All (x, y) with y >= 0 and D*y^p = f(x)*g(x), |x| <= bound, by bisection roots."""
    out = set()
    for x in range(-bound, bound + 1):
        v = sum(c * x**i for i, c in enumerate(f.coeffs)) * sum(c * x**i for i, c in enumerate(g.coeffs))
        if v % D:
            continue
        y = kth_root(v // D, p)
        if y is not None and y >= 0:
            out.add((x, y))
        elif y is not None and p % 2 == 0:
            out.add((x, -y))
    return out


def poly(*coeffs_high_first):
    return IntegerPolynomial(list(reversed(coeffs_high_first)))
