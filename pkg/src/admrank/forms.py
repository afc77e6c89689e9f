"""Binary forms with exact rational coefficients and their apolarity algebra.

A degree-``d`` form is ``f(x, y) = sum_j c_j x^(d-j) y^j``. Operators are
forms in ``X, Y`` acting by differentiation, ``X^a Y^b -> d^a/dx^a d^b/dy^b``.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import perm

from . import linalg
from . import upoly
from .exceptions import (
    DegreeOutOfRangeError,
    DegreeTooHighError,
    LengthMismatchError,
    ParseError,
    ZeroFormError,
)


def _ff(n, k):
    """Falling factorial ``n (n-1) ... (n-k+1)``; zero when ``k > n``."""
    return perm(n, k) if 0 <= k <= n else 0


@dataclass(frozen=True)
class BinaryForm:
    """A nonzero binary form. ``coeffs[j]`` multiplies ``x^(d-j) y^j``."""

    degree: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if self.degree < 0:
            raise DegreeOutOfRangeError(f"negative degree {self.degree}")
        if len(coeffs) != self.degree + 1:
            raise LengthMismatchError(
                f"degree {self.degree} needs {self.degree + 1} coefficients, got {len(coeffs)}"
            )
        if not any(coeffs):
            raise ZeroFormError("the zero form is not a point of projective space")
        object.__setattr__(self, "coeffs", coeffs)

    is_zero = False

    def __bool__(self):
        return True

    def canonical(self):
        """Primitive integer representative with first nonzero coefficient positive."""
        return BinaryForm(self.degree, linalg.primitive(self.coeffs))

    def is_canonical(self):
        return self.coeffs == self.canonical().coeffs

    def projectively_equal(self, other):
        return (
            isinstance(other, BinaryForm)
            and self.degree == other.degree
            and self.canonical().coeffs == other.canonical().coeffs
        )

    def __call__(self, x, y):
        d = self.degree
        return sum(c * x ** (d - j) * y**j for j, c in enumerate(self.coeffs))

    def dehomogenize(self):
        """``f(t, 1)`` as a univariate polynomial, lowest degree first."""
        return upoly.trim(reversed(self.coeffs))

    def multiplicity_at_infinity(self):
        """Order of vanishing at ``[1:0]``, i.e. the number of leading zero coefficients."""
        return next(j for j, c in enumerate(self.coeffs) if c != 0)

    def __add__(self, other):
        if getattr(other, "is_zero", False):
            return self
        if self.degree != other.degree:
            raise LengthMismatchError("cannot add forms of different degree")
        return form_or_zero(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return form_or_zero(self.degree, [c * a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            return multiply(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __str__(self):
        return format_form(self)

    def pretty(self, xvar="x", yvar="y"):
        terms = []
        d = self.degree
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = []
            if d - j:
                mono.append(xvar + (f"^{d - j}" if d - j > 1 else ""))
            if j:
                mono.append(yvar + (f"^{j}" if j > 1 else ""))
            body = "*".join(mono)
            if not body:
                terms.append(str(c))
            elif c == 1:
                terms.append(body)
            elif c == -1:
                terms.append("-" + body)
            else:
                terms.append(f"{c}*{body}")
        return " + ".join(terms).replace("+ -", "- ")


@dataclass(frozen=True)
class Zero:
    """The zero form of a given degree (a contraction result, never an input)."""

    degree: int
    is_zero = True

    def __bool__(self):
        return False

    @property
    def coeffs(self):
        return (Fraction(0),) * (self.degree + 1)

    def __add__(self, other):
        return other

    def scale(self, c):
        return self


def form_or_zero(degree, coeffs):
    if any(c != 0 for c in coeffs):
        return BinaryForm(degree, tuple(coeffs))
    return Zero(degree)


def make_form(degree, coeffs):
    """Validated, canonicalized form."""
    coeffs = tuple(Fraction(c) for c in coeffs)
    if len(coeffs) != degree + 1:
        raise LengthMismatchError(f"degree {degree} needs {degree + 1} coefficients, got {len(coeffs)}")
    if not any(coeffs):
        raise ZeroFormError("all coefficients vanish")
    return BinaryForm(degree, coeffs).canonical()


def monomial(degree, j):
    """``x^(degree-j) y^j``."""
    return BinaryForm(degree, tuple(1 if i == j else 0 for i in range(degree + 1)))


def linear_power(alpha, beta, degree):
    """``(alpha x + beta y)^degree`` expanded (binomial coefficients included)."""
    from math import comb

    a, b = Fraction(alpha), Fraction(beta)
    return BinaryForm(degree, tuple(comb(degree, j) * a ** (degree - j) * b**j for j in range(degree + 1)))


def multiply(f, g):
    out = [Fraction(0)] * (f.degree + g.degree + 1)
    for i, a in enumerate(f.coeffs):
        if a:
            for j, b in enumerate(g.coeffs):
                out[i + j] += a * b
    return BinaryForm(f.degree + g.degree, tuple(out))


def from_dehomogenized(p, degree):
    """Homogenize a univariate ``p(t)`` (lowest first) to degree ``degree``."""
    p = upoly.trim(p)
    coeffs = [Fraction(0)] * (degree + 1)
    for i, c in enumerate(p):
        coeffs[degree - i] = Fraction(c)
    return BinaryForm(degree, tuple(coeffs))


def substitute(f, a, b, c, d):
    """``f(a x + b y, c x + d y)`` for rational ``a, b, c, d``."""
    deg = f.degree
    total = [Fraction(0)] * (deg + 1)
    lx = (Fraction(a), Fraction(b))  # a x + b y
    ly = (Fraction(c), Fraction(d))
    for j, coef in enumerate(f.coeffs):
        if coef == 0:
            continue
        term = [Fraction(coef)]
        for _ in range(deg - j):
            term = _mul_lin(term, lx)
        for _ in range(j):
            term = _mul_lin(term, ly)
        for i, t in enumerate(term):
            total[i] += t
    return BinaryForm(deg, tuple(total))


def _mul_lin(vec, lin):
    out = [Fraction(0)] * (len(vec) + 1)
    for i, v in enumerate(vec):
        out[i] += v * lin[0]
        out[i + 1] += v * lin[1]
    return out


def sigma_prime_image(f):
    """Coefficient involution ``c_j -> (-1)^j c_(d-j)`` induced by ``[z0:z1] -> [-conj z1 : conj z0]``.

    On rational coefficients conjugation is the identity. For even ``d`` this
    is an involution; for odd ``d`` it squares to ``-1``.
    """
    d = f.degree
    return BinaryForm(d, tuple((-1) ** j * f.coeffs[d - j] for j in range(d + 1)))


def is_sigma_prime_real(f):
    """Whether ``[f]`` is fixed by the induced involution (as a projective point)."""
    return sigma_prime_image(f).projectively_equal(f)


# -- apolarity -------------------------------------------------------------


def contract(op, f):
    """Apply the operator ``op(X, Y) = sum_i o_i X^(k-i) Y^i`` to ``f`` by differentiation."""
    k, d = op.degree, f.degree
    if k > d:
        raise DegreeTooHighError(f"operator degree {k} exceeds form degree {d}")
    out = [Fraction(0)] * (d - k + 1)
    for i, o in enumerate(op.coeffs):
        if o == 0:
            continue
        for m in range(d - k + 1):
            c = f.coeffs[m + i]
            if c:
                out[m] += o * c * _ff(d - m - i, k - i) * _ff(m + i, i)
    return form_or_zero(d - k, out)


def catalecticant(f, k):
    """Matrix of ``h -> contract(h, f)`` on degree-``k`` operators, size ``(d-k+1) x (k+1)``.

    Column ``i`` is the coefficient vector of ``contract(X^(k-i) Y^i, f)``.
    """
    d = f.degree
    if not 0 <= k <= d:
        raise DegreeOutOfRangeError(f"k={k} outside 0..{d}")
    return [
        [f.coeffs[m + i] * _ff(d - m - i, k - i) * _ff(m + i, i) for i in range(k + 1)]
        for m in range(d - k + 1)
    ]


def catalecticant_rank(f, k):
    return linalg.rank(catalecticant(f, k))


@dataclass(frozen=True)
class ApolarSystem:
    """Basis of the degree-``k`` piece of the apolar ideal of a degree-``d`` form."""

    source_degree: int
    operator_degree: int
    basis: tuple

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, h):
        """Exact membership of an operator form in the span."""
        if getattr(h, "is_zero", False):
            return True
        if h.degree != self.operator_degree:
            return False
        rows = [list(b.coeffs) for b in self.basis]
        return linalg.rank(rows + [list(h.coeffs)]) == linalg.rank(rows) if rows else False

    def same_span(self, forms):
        """Mutual membership: ``forms`` span exactly this system."""
        forms = list(forms)
        if not all(self.contains(h) for h in forms):
            return False
        return linalg.rank([list(h.coeffs) for h in forms]) == self.dim

    def combination(self, weights):
        """``sum w_i basis_i`` (may be :class:`Zero`)."""
        acc = [Fraction(0)] * (self.operator_degree + 1)
        for w, b in zip(weights, self.basis):
            for j, c in enumerate(b.coeffs):
                acc[j] += Fraction(w) * c
        return form_or_zero(self.operator_degree, acc)

    def pencil(self):
        """Generators ``(g1, g2)`` of a two-dimensional system in reduced echelon form.

        ``g2`` has the earlier pivot (a nonzero ``x^k`` coefficient when
        possible) and a zero in ``g1``'s pivot position; ``g1`` is listed first.
        """
        from .exceptions import NotAPencilError

        if self.dim != 2:
            raise NotAPencilError(f"apolar system has dimension {self.dim}, not 2")
        a, b = (list(h.coeffs) for h in self.basis)
        pa = next(j for j, c in enumerate(a) if c)
        pb = next(j for j, c in enumerate(b) if c)
        if pb < pa:
            a, b, pa, pb = b, a, pb, pa
        if pa == pb:
            b = [y - b[pa] / a[pa] * x for x, y in zip(a, b)]
            pb = next(j for j, c in enumerate(b) if c)
        a = [x - a[pb] / b[pb] * y for x, y in zip(a, b)]
        g2 = BinaryForm(self.operator_degree, a).canonical()
        g1 = BinaryForm(self.operator_degree, b).canonical()
        return g1, g2


def apolar_system(f, k):
    """Kernel of the degree-``k`` catalecticant, as canonical forms."""
    d = f.degree
    if not 0 <= k <= d:
        raise DegreeOutOfRangeError(f"k={k} outside 0..{d}")
    ker = linalg.nullspace(catalecticant(f, k), k + 1)
    return ApolarSystem(d, k, tuple(BinaryForm(k, v) for v in ker))


def apolar_subsystem(f, k, extra_rows):
    """Apolar forms of degree ``k`` that also satisfy the linear conditions ``extra_rows``."""
    rows = catalecticant(f, k) + [list(r) for r in extra_rows]
    ker = linalg.nullspace(rows, k + 1)
    return ApolarSystem(f.degree, k, tuple(BinaryForm(k, v) for v in ker))


# -- text format -------------------------------------------------------------


def parse_coefficients(text):
    """Parse ``d:c0,c1,...,cd`` into ``(d, [Fraction, ...])`` without validating zeros."""
    text = text.strip()
    if ":" not in text:
        raise ParseError(f"expected 'd:c0,...,cd', got {text!r}")
    head, _, body = text.partition(":")
    try:
        deg = int(head)
    except ValueError:
        raise ParseError(f"bad degree {head!r}") from None
    if deg < 0:
        raise ParseError(f"negative degree {deg}")
    try:
        coeffs = [Fraction(tok.strip()) for tok in body.split(",")]
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad coefficient list {body!r}") from None
    if len(coeffs) != deg + 1:
        raise ParseError(f"degree {deg} needs {deg + 1} coefficients, got {len(coeffs)}")
    return deg, coeffs


def parse_form(text, canonical=True):
    deg, coeffs = parse_coefficients(text)
    if not any(coeffs):
        raise ZeroFormError(f"{text!r} is the zero form")
    f = BinaryForm(deg, tuple(coeffs))
    return f.canonical() if canonical else f


def format_form(f):
    return f"{f.degree}:" + ",".join(str(c) for c in f.coeffs)
