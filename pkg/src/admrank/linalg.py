"""Fraction-free (Bareiss) elimination over the integers.

Rational matrices are cleared row by row to integer matrices first; the
elimination itself never leaves ``int``.
"""

from fractions import Fraction
from math import gcd, lcm


def clear_denominators(row):
    """Scale a rational vector to an integer vector (same projective point)."""
    den = 1
    for c in row:
        den = lcm(den, Fraction(c).denominator)
    return [int(Fraction(c) * den) for c in row]


def primitive(vec):
    """Primitive integer representative with first nonzero entry positive.

    Returns a tuple of ints. The zero vector is returned unchanged.
    """
    ints = clear_denominators(vec)
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g == 0:
        return tuple(ints)
    lead = next(c for c in ints if c != 0)
    if lead < 0:
        g = -g
    return tuple(c // g for c in ints)


def bareiss_echelon(matrix):
    """Row echelon form of an integer copy of ``matrix`` by Bareiss elimination.

    Returns ``(rows, pivots)`` where ``rows`` is the echelon matrix (list of
    int lists, only the first ``len(pivots)`` rows are nonzero) and ``pivots``
    the pivot column of each of those rows. Every division is exact.
    """
    a = [clear_denominators(r) for r in matrix]
    n_rows = len(a)
    if n_rows == 0:
        return a, []
    n_cols = len(a[0])
    pivots = []
    prev = 1
    r = 0
    for c in range(n_cols):
        if r >= n_rows:
            break
        p = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, n_rows):
            ai = a[i]
            f = ai[c]
            for j in range(c, n_cols):
                ai[j] = (piv * ai[j] - f * a[r][j]) // prev
        # rows above r keep their entries; only the trailing block is updated
        prev = piv
        pivots.append(c)
        r += 1
    return a, pivots


def rank(matrix):
    if not matrix or not matrix[0]:
        return 0
    return len(bareiss_echelon(matrix)[1])


def determinant(matrix):
    """Exact determinant of a square rational matrix (Bareiss, with row scaling undone)."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    rows = []
    for r in matrix:
        den = 1
        for c in r:
            den = lcm(den, Fraction(c).denominator)
        scale /= den
        rows.append([int(Fraction(c) * den) for c in r])
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if p is None:
                return Fraction(0)
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] * scale


def nullspace(matrix, n_cols=None):
    """Basis of the right kernel as primitive integer tuples.

    One vector per free column, in increasing column order. ``n_cols`` is
    needed only when ``matrix`` has no rows.
    """
    if not matrix:
        n = n_cols or 0
        return [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    n = len(matrix[0])
    ech, pivots = bareiss_echelon(matrix)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            s = sum((ech[r][j] * x[j] for j in range(pc + 1, n)), Fraction(0))
            x[pc] = -s / ech[r][pc]
        basis.append(primitive(x))
    return basis


def solve_homogeneous_1d(matrix, n_cols):
    """The kernel vector if the kernel is one-dimensional, else ``None``."""
    ker = nullspace(matrix, n_cols)
    return ker[0] if len(ker) == 1 else None
