"""Exact real-root machinery for binary forms and univariate polynomials.

Sturm sequences decide real root counts; the root ``[1:0]`` of a form is
tracked separately from the dehomogenization ``f(t, 1)``.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd, lcm

from . import upoly
from .exceptions import DegenerateDehomogenizationError, NotSigmaStableError
from .forms import BinaryForm, from_dehomogenized, is_sigma_prime_real, substitute


class RealStructure(enum.Enum):
    STANDARD = "standard"
    FIXED_POINT_FREE = "fpf"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        v = str(value).lower()
        if v in ("standard", "sigma", "std"):
            return cls.STANDARD
        if v in ("fpf", "fixed_point_free", "fixedpointfree", "sigma_prime"):
            return cls.FIXED_POINT_FREE
        raise ValueError(f"unknown real structure {value!r}")

    def apply_to_root(self, z):
        """Action on an affine root ``z`` of ``f(t, 1)`` (``None`` stands for ``[1:0]``)."""
        if self is RealStructure.STANDARD:
            return None if z is None else z.conjugate()
        if z is None:
            return 0j
        if z == 0:
            return None
        return -1 / z.conjugate()


STANDARD = RealStructure.STANDARD
FIXED_POINT_FREE = RealStructure.FIXED_POINT_FREE


@dataclass(frozen=True)
class RootClassification:
    total_distinct: int
    real_distinct: int
    conj_pairs: int
    is_squarefree: bool
    structure: RealStructure

    @property
    def label(self):
        return (self.conj_pairs, self.real_distinct)


# -- univariate Sturm machinery ------------------------------------------------


def _positive_primitive(p):
    """Divide by a positive rational so coefficients become coprime integers (signs kept)."""
    if not p:
        return p
    den = 1
    for c in p:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return tuple(c // g for c in ints)


def sturm_sequence(p):
    p = _positive_primitive(upoly.trim(p))
    seq = [p]
    if len(p) <= 1:
        return seq
    seq.append(_positive_primitive(upoly.deriv(p)))
    while len(seq[-1]) > 1:
        r = upoly.rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append(_positive_primitive(upoly.scale(r, -1)))
    return seq


def _sign(x):
    return (x > 0) - (x < 0)


def _variations(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sign_at(q, x):
    """Sign of an integer polynomial at a rational point, in integer arithmetic."""
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    acc = 0
    dpow = 1
    for c in reversed(q):
        acc = acc * num + c * dpow
        dpow *= den
    # acc = den^n * q(x)
    return _sign(acc)


def _variations_at(seq, x):
    if x == "+inf":
        return _variations([_sign(q[-1]) for q in seq])
    if x == "-inf":
        return _variations([_sign(q[-1]) * (-1) ** (len(q) - 1) for q in seq])
    return _variations([_sign_at(q, x) for q in seq])


def count_roots_in(p, lo="-inf", hi="+inf", seq=None):
    """Number of distinct real roots of ``p`` in ``(lo, hi]`` (endpoints may be ``'-inf'``/``'+inf'``)."""
    if seq is None:
        seq = sturm_sequence(p)
    return _variations_at(seq, lo) - _variations_at(seq, hi)


def count_real_univariate(p):
    p = upoly.trim(p)
    if len(p) <= 1:
        return 0
    return count_roots_in(p)


def root_bound(p):
    """Cauchy bound: every complex root has modulus below the returned integer."""
    p = upoly.trim(p)
    lead = abs(Fraction(p[-1]))
    m = max((abs(Fraction(c)) / lead for c in p[:-1]), default=Fraction(0))
    return floor(m) + 2


def isolate_real_roots(p):
    """Disjoint sorted rational intervals ``(lo, hi)`` each holding exactly one distinct real root.

    An interval with ``lo < hi`` is open with non-root endpoints; ``lo == hi``
    marks an exact rational root.
    """
    p = upoly.trim(p)
    if len(p) <= 1:
        return []
    p = upoly.squarefree(p)
    seq = sturm_sequence(p)
    total = count_roots_in(p, seq=seq)
    if total == 0:
        return []
    b = Fraction(root_bound(p))
    out = []

    def value(x):
        return _sign_at(seq[0], x)

    def rec(lo, hi, n):
        if n == 0:
            return
        if n == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        if value(mid) == 0:
            delta = (hi - lo) / 4
            while True:
                a, c = mid - delta, mid + delta
                if value(a) != 0 and value(c) != 0 and count_roots_in(p, a, c, seq) == 1:
                    break
                delta /= 2
            nl = count_roots_in(p, lo, a, seq)
            rec(lo, a, nl)
            out.append((mid, mid))
            rec(c, hi, n - 1 - nl)
        else:
            nl = count_roots_in(p, lo, mid, seq)
            rec(lo, mid, nl)
            rec(mid, hi, n - nl)

    rec(-b, b, total)
    return out


def refine_interval(p, interval, width, seq=None):
    """Bisect an isolating interval until ``hi - lo <= width``."""
    lo, hi = interval
    if lo == hi:
        return interval
    if seq is None:
        seq = sturm_sequence(upoly.squarefree(upoly.trim(p)))
    while hi - lo > width:
        mid = (lo + hi) / 2
        if _sign_at(seq[0], mid) == 0:
            return (mid, mid)
        if count_roots_in(p, lo, mid, seq) == 1:
            hi = mid
        else:
            lo = mid
    return (lo, hi)


def simplest_between(lo, hi=None):
    """The rational with smallest denominator strictly inside ``(lo, hi)`` (``hi=None`` is +infinity).

    Among integers the one nearest zero is taken; otherwise continued-fraction
    descent (Stern-Brocot) on the fractional parts.
    """
    lo = Fraction(lo)
    if hi is not None:
        hi = Fraction(hi)
        if not lo < hi:
            raise ValueError("empty interval")
    fl = floor(lo)
    if hi is None:
        return Fraction(0) if lo < 0 else Fraction(fl + 1)
    if fl + 1 < hi:
        if lo < 0 < hi:
            return Fraction(0)
        if lo >= 0:
            return Fraction(fl + 1)
        return Fraction(ceil(hi) - 1)
    a, b = lo - fl, hi - fl
    inner = simplest_between(1 / b, 1 / a if a else None)
    return fl + 1 / inner


# -- binary forms --------------------------------------------------------------


def squarefree_part(f):
    """``f / gcd(f_x, f_y)`` as a canonical form."""
    e = f.multiplicity_at_infinity()
    p = f.dehomogenize()
    s = upoly.squarefree(p)
    m = len(s) - 1
    base = from_dehomogenized(s, m)
    if e > 0:
        base = BinaryForm(m + 1, (0,) + base.coeffs)
    return base.canonical()


def is_squarefree(f):
    return squarefree_part(f).degree == f.degree


def count_real_roots(f, structure=STANDARD):
    structure = RealStructure.parse(structure)
    sqf = squarefree_part(f)
    total = sqf.degree
    sf = total == f.degree
    if structure is FIXED_POINT_FREE:
        if not is_sigma_prime_real(f):
            raise NotSigmaStableError("root set is not closed under z -> -1/conj(z)")
        return RootClassification(total, 0, total // 2, sf, structure)
    real = (1 if sqf.multiplicity_at_infinity() > 0 else 0) + count_real_univariate(sqf.dehomogenize())
    return RootClassification(total, real, (total - real) // 2, sf, structure)


def pencil_coordinates(g1, g2):
    """Smallest ``m >= 0`` such that after ``y -> y + m x`` some generator has nonzero ``x^k`` coefficient."""
    for m in range(g1.degree + 2):
        if g1(1, m) != 0 or g2(1, m) != 0:
            return m
    raise DegenerateDehomogenizationError("both generators vanish at every candidate point")


def discriminant_in_lambda(g1, g2):
    """``Res_t(p, dp/dt)`` for ``p(t) = g1(t,1) + lam*g2(t,1)`` as a primitive integer polynomial in ``lam``.

    The formal degree of ``p`` is ``k``, so values of ``lam`` where the ``t^k``
    coefficient vanishes are roots as well. Returned lowest degree first,
    positive leading coefficient, ``()`` if identically zero.
    """
    k = g1.degree
    if g2.degree != k or k < 2:
        raise ValueError("generators must share a degree k >= 2")
    m = pencil_coordinates(g1, g2)
    if m:
        g1, g2 = substitute(g1, 1, 0, m, 1), substitute(g2, 1, 0, m, 1)
    A = tuple(reversed(g1.coeffs))
    B = tuple(reversed(g2.coeffs))
    xs, ys = [], []
    lam = 0
    while len(xs) < 2 * k:
        lead = A[k] + lam * B[k]
        if lead != 0:
            p = upoly.trim(a + lam * b for a, b in zip(A, B))
            xs.append(Fraction(lam))
            ys.append(upoly.resultant(p, upoly.deriv(p)))
        lam = -lam if lam > 0 else -lam + 1
    poly = upoly.interpolate(xs, ys)
    return upoly.integer_primitive(poly)


def pencil_member(g1, g2, lam):
    """``g1 + lam*g2``; ``lam=None`` stands for the point at infinity (``g2``)."""
    if lam is None:
        return g2
    return g1 + g2.scale(lam)


def interval_samples(p, roots):
    """One rational per component of the real line minus the isolated roots of ``p``.

    Touching isolating intervals are refined apart first so that each gap
    sample is the smallest-denominator rational in a genuine gap. Returns
    ``(samples, rational_roots)``.
    """
    if not roots:
        return [Fraction(0)], []
    roots = list(roots)
    seq = None
    for i in range(len(roots) - 1):
        while roots[i][1] >= roots[i + 1][0]:
            if seq is None:
                seq = sturm_sequence(upoly.squarefree(upoly.trim(p)))
            roots[i] = _halve(p, roots[i], seq)
            roots[i + 1] = _halve(p, roots[i + 1], seq)
    samples = [simplest_between(-roots[0][0], None) * -1 if roots[0][0] <= 0 else Fraction(0)]
    for (_, hi1), (lo2, _) in zip(roots, roots[1:]):
        samples.append(simplest_between(hi1, lo2))
    samples.append(simplest_between(roots[-1][1]) if roots[-1][1] >= 0 else Fraction(0))
    rational = [lo for lo, hi in roots if lo == hi]
    return samples, rational


def _halve(p, interval, seq):
    lo, hi = interval
    if lo == hi:
        return interval
    return refine_interval(p, interval, (hi - lo) / 2, seq)
