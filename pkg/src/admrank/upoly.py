"""Dense univariate polynomials over exact fields.

A polynomial is a tuple of coefficients, lowest degree first, with no
trailing zeros; the zero polynomial is ``()``. Coefficients may be ``int``,
``Fraction`` or :class:`GaussianRational`; every routine only needs field
arithmetic and comparison with zero.
"""

from fractions import Fraction
from math import comb

from .linalg import determinant, primitive


def _inv(c):
    return 1 / c if isinstance(c, GaussianRational) else Fraction(1) / c


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def degree(p):
    return len(p) - 1


def lc(p):
    return p[-1] if p else 0


def add(p, q):
    n = max(len(p), len(q))
    return trim((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def sub(p, q):
    n = max(len(p), len(q))
    return trim((p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n))


def scale(p, c):
    return trim(c * a for a in p)


def mul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def deriv(p):
    return trim(i * p[i] for i in range(1, len(p)))


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def divmod_poly(a, b):
    """Quotient and remainder over a field. ``b`` must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    inv = _inv(b[-1])
    q = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv
        if c == 0:
            continue
        q[i - db] = c
        for j in range(db + 1):
            a[i - db + j] -= c * b[j]
    return trim(q), trim(a[:db])


def rem(a, b):
    return divmod_poly(a, b)[1]


def monic(p):
    if not p:
        return p
    inv = _inv(p[-1])
    return tuple(a * inv for a in p)


def gcd_poly(a, b):
    a, b = trim(a), trim(b)
    if not any(isinstance(c, GaussianRational) for c in a + b):
        return _gcd_rational(a, b)
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def _gcd_rational(a, b):
    """Monic gcd over Q via the primitive PRS on integer polynomials."""
    if not a or not b:
        return monic(a or b)
    a, b = list(integer_primitive(a)), list(integer_primitive(b))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = pseudo_rem(a, b)
        a, b = b, (list(integer_primitive(r)) if r else [])
    return monic(tuple(Fraction(c) for c in a))


def squarefree(p):
    """``p / gcd(p, p')``, monic. Constant polynomials map to ``(1,)``."""
    p = trim(p)
    if len(p) <= 1:
        return (Fraction(1),) if p else p
    g = gcd_poly(p, deriv(p))
    return monic(divmod_poly(p, g)[0])


def integer_primitive(p):
    """Primitive integer coefficients with positive leading coefficient."""
    if not p:
        return ()
    v = primitive(list(reversed(p)))
    return tuple(reversed(v))


def pseudo_rem(a, b):
    """Pseudo-remainder ``lc(b)^(deg a - deg b + 1) * a mod b`` over the integers."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while len(a) - 1 >= db and a:
        c = a[-1]
        a = [lb * x for x in a]
        shift = len(a) - 1 - db
        for j in range(db + 1):
            a[shift + j] -= c * b[j]
        a = list(trim(a[:-1]))
        e -= 1
    return trim(x * lb**e for x in a)


def resultant(a, b):
    """Resultant of two polynomials with rational coefficients via the subresultant PRS.

    Degrees are the actual degrees of ``a`` and ``b``.
    """
    a, b = trim(a), trim(b)
    if not a or not b:
        return Fraction(0)
    a_int, b_int = integer_primitive(a), integer_primitive(b)
    # a = ca * a_int; the content ratio is carried in t
    ca = Fraction(a[-1]) / a_int[-1]
    cb = Fraction(b[-1]) / b_int[-1]
    A, B = list(a_int), list(b_int)
    t = ca ** (len(B) - 1) * cb ** (len(A) - 1)
    s = 1
    if len(A) < len(B):
        A, B = B, A
        if (len(A) - 1) % 2 and (len(B) - 1) % 2:
            s = -s
    g = Fraction(1)
    h = Fraction(1)
    while True:
        da, db = len(A) - 1, len(B) - 1
        if db == 0:
            break
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        R = pseudo_rem(A, B)
        A = B
        if not R:
            return Fraction(0)
        den = g * h**delta
        B = [Fraction(x) / den for x in R]
        assert all(x.denominator == 1 for x in B)
        B = [int(x) for x in B]
        g = Fraction(A[-1])
        h = h ** (1 - delta) * g**delta
    da = len(A) - 1
    h = h ** (1 - da) * Fraction(B[-1]) ** da
    return s * t * h


def sylvester_matrix(a, b):
    """Sylvester matrix of ``a`` (formal degree m) and ``b`` (formal degree n).

    Inputs are coefficient tuples lowest-first *including* possible zero
    leading coefficients (not trimmed), so the formal degree is ``len - 1``.
    """
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows = []
    ha = list(reversed(a))
    hb = list(reversed(b))
    for i in range(n):
        rows.append([0] * i + ha + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + hb + [0] * (size - n - 1 - i))
    return rows


def resultant_sylvester(a, b):
    return determinant(sylvester_matrix(a, b))


def interpolate(xs, ys):
    """Newton interpolation through ``(xs[i], ys[i])``; exact."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = (coef[-1],)
    for i in range(n - 2, -1, -1):
        p = add(mul(p, (-Fraction(xs[i]), Fraction(1))), (coef[i],))
    return p


def taylor_shift(p, m):
    """Coefficients of ``p(x + m)``."""
    out = [0] * len(p)
    for i, c in enumerate(p):
        for k in range(i + 1):
            out[k] += c * comb(i, k) * m ** (i - k)
    return trim(out)


def format_poly(p):
    """Serialize as ``k:c0,...,ck`` with ``c0`` the leading coefficient."""
    p = trim(p)
    if not p:
        return "0:0"
    return f"{len(p) - 1}:" + ",".join(str(Fraction(c)) for c in reversed(p))


def parse_poly(text):
    from .forms import parse_coefficients

    deg, coeffs = parse_coefficients(text)
    return trim(reversed(coeffs))


class GaussianRational:
    """Element ``re + i*im`` of Q(i) with exact ``Fraction`` parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _coerce(x):
        return x if isinstance(x, GaussianRational) else GaussianRational(x)

    def conjugate_gr(self):
        return GaussianRational(self.re, -self.im)

    def __add__(self, o):
        o = self._coerce(o)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-self._coerce(o))

    def __rsub__(self, o):
        return self._coerce(o) - self

    def __mul__(self, o):
        o = self._coerce(o)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._coerce(o)
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return self * GaussianRational(o.re / n, -o.im / n)

    def __rtruediv__(self, o):
        return self._coerce(o) / self

    def __pow__(self, e):
        out = GaussianRational(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, o):
        if isinstance(o, (int, Fraction, GaussianRational)):
            o = self._coerce(o)
            return self.re == o.re and self.im == o.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"


def yun(p):
    """Square-free decomposition ``p = c * prod a_i^i``; returns ``[a_1, a_2, ...]`` (monic)."""
    p = trim(p)
    if len(p) <= 1:
        return []
    dp = deriv(p)
    b = gcd_poly(p, dp)
    c = divmod_poly(p, b)[0]
    d = sub(divmod_poly(dp, b)[0], deriv(c))
    out = []
    while len(c) > 1:
        a = gcd_poly(c, d)
        out.append(a)
        c = divmod_poly(c, a)[0]
        d = sub(divmod_poly(d, a)[0], deriv(c))
    while out and len(out[-1]) <= 1:
        out.pop()
    return out
