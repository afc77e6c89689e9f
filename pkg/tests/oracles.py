"""Independent oracles: brute-force minors and high-precision numeric roots.

Nothing here calls the package's elimination, contraction or Sturm code.
"""

from fractions import Fraction
from itertools import combinations

import mpmath


def _diff_monomials(poly, var):
    """Differentiate a dict {(i, j): c} for x^i y^j with respect to x (var=0) or y (var=1)."""
    out = {}
    for (i, j), c in poly.items():
        e = (i, j)[var]
        if e:
            key = (i - 1, j) if var == 0 else (i, j - 1)
            out[key] = out.get(key, 0) + c * e
    return out


def diff_catalecticant(coeffs, k):
    """Columns are the coefficient vectors of d^(k-i)/dx d^i/dy applied to the form."""
    d = len(coeffs) - 1
    poly = {(d - j, j): Fraction(c) for j, c in enumerate(coeffs)}
    cols = []
    for i in range(k + 1):
        p = poly
        for _ in range(k - i):
            p = _diff_monomials(p, 0)
        for _ in range(i):
            p = _diff_monomials(p, 1)
        cols.append([p.get((d - k - m, m), Fraction(0)) for m in range(d - k + 1)])
    return [[cols[i][m] for i in range(k + 1)] for m in range(d - k + 1)]


def det2(a, b, c, d):
    return a * d - b * c


def det3(m):
    return (
        m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2])
        - m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2])
        + m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1])
    )


def all_2x2_minors_vanish(m):
    rows, cols = len(m), len(m[0])
    for r1, r2 in combinations(range(rows), 2):
        for c1, c2 in combinations(range(cols), 2):
            if det2(m[r1][c1], m[r1][c2], m[r2][c1], m[r2][c2]):
                return False
    return True


def cross(u, v):
    return [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]


def oracle_rank_at_most(coeffs):
    """``(is_rank_one, is_rank_at_most_two)`` for forms of degree <= 4 by minors alone."""
    d = len(coeffs) - 1
    if d == 1:
        return True, True
    rank1 = all_2x2_minors_vanish(diff_catalecticant(coeffs, 1))
    if rank1:
        return True, True
    if d == 2:
        # a pencil of quadrics always contains a square-free member
        return False, True
    c2 = diff_catalecticant(coeffs, 2)
    if d == 4 and det3(c2) != 0:
        return False, False
    # the degree-2 kernel is one-dimensional here; it is the cross product of two independent rows
    h = None
    for r1, r2 in combinations(range(len(c2)), 2):
        v = cross(c2[r1], c2[r2])
        if any(v):
            h = v
            break
    h0, h1, h2 = h
    return False, h1 * h1 - 4 * h0 * h2 != 0


def numeric_classification(coeffs, dps=100):
    """``(real, pairs, certified)`` by mpmath roots of the dehomogenization; root [1:0] handled apart."""
    d = len(coeffs) - 1
    lead_zeros = next(j for j, c in enumerate(coeffs) if c)
    # the root [1:0] appears as the vanishing of c_0, c_1, ...
    with mpmath.workdps(dps):
        poly = [mpmath.mpf(Fraction(c).numerator) / Fraction(c).denominator for c in coeffs[lead_zeros:]]
        n = len(poly) - 1
        real = 1 if lead_zeros else 0
        pairs = 0
        certified = True
        if n >= 1:
            roots, err = mpmath.polyroots(poly, maxsteps=400, extraprec=4 * dps, error=True)
            tol = max(err, mpmath.mpf(10) ** (-dps // 2))
            for z in roots:
                im = abs(mpmath.im(z))
                if im <= tol:
                    real += 1
                elif im > 1000 * tol:
                    pairs += 1
                else:
                    certified = False
            pairs //= 2
    return real, pairs, certified
