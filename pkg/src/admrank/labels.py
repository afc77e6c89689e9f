"""Labels of minimal admissible decompositions and the real rank.

A decomposition of ``f`` of length ``k`` corresponds to a square-free apolar
form of degree ``k``; its label ``(a, b)`` counts conjugate pairs ``a`` and
real points ``b`` among the roots. When the relevant apolar space is a pencil
the discriminant in the pencil parameter splits the real line into intervals
of constant label, which makes the label set exact.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice

import numpy as np

from . import linalg, upoly
from .exceptions import CertificateSearchExhaustedError, NotSigmaStableError, ZeroFormError
from .forms import (
    ApolarSystem,
    BinaryForm,
    apolar_subsystem,
    apolar_system,
    is_sigma_prime_real,
    sigma_prime_image,
)
from .rank import admissible_rank, border_rank, complex_rank, grid_weights, pencil_search_order, squarefree_member
from .realroots import FIXED_POINT_FREE, STANDARD, RealStructure, count_real_roots, is_squarefree, pencil_member
from .upoly import GaussianRational


@dataclass(frozen=True, order=True)
class Label:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0 or (self.a == 0 and self.b == 0):
            raise ValueError(f"invalid label ({self.a},{self.b})")

    @property
    def weight(self):
        return 2 * self.a + self.b

    def __str__(self):
        return f"({self.a},{self.b})"


@dataclass(frozen=True)
class Witness:
    """An apolar form ``form + i*imag`` realizing a label; ``lam`` is the pencil parameter if any.

    ``lam`` is ``"inf"`` for the second pencil generator and ``None`` outside pencils.
    """

    form: BinaryForm
    imag: BinaryForm = None
    lam: object = None


@dataclass(frozen=True)
class LabelSet:
    rank: int
    labels: frozenset
    exact: bool
    structure: RealStructure
    mode: str
    witnesses: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def key(self):
        return label_set_key(self.labels)

    def sorted_labels(self):
        return sorted(self.labels, key=lambda lab: (-lab.a, lab.b))


def label_set_key(labels):
    return "{" + ",".join(str(lab) for lab in sorted(labels, key=lambda lab: (-lab.a, lab.b))) + "}"


@dataclass(frozen=True)
class IntervalUndecided:
    """Real rank known only to lie in ``[lo, hi]`` (a witness exists at ``hi``)."""

    lo: int
    hi: int


def classify(h, structure=STANDARD):
    """Label of a square-free form's root set, ``None`` if it has a repeated root."""
    if getattr(h, "is_zero", False):
        return None
    rc = count_real_roots(h, structure)
    if not rc.is_squarefree:
        return None
    return Label(rc.conj_pairs, rc.real_distinct)


# -- candidate generation -------------------------------------------------------

_REAL_POINTS = [Fraction(x) for x in (0, 1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2), 3, -3, Fraction(1, 3),
                                      Fraction(-1, 3), 4, -4, Fraction(3, 2), Fraction(-3, 2), 5, -5)]
_COMPLEX_POINTS = [GaussianRational(re, im) for re, im in ((0, 1), (1, 1), (-1, 2), (2, 1), (Fraction(1, 2), 1),
                                                            (-2, 1), (0, 2), (1, 3), (-1, 1), (3, 2), (0, Fraction(1, 2)))]


def _value(h, z):
    """``h(z, 1)`` for a rational or Gaussian-rational ``z``."""
    acc = 0
    for c in h.coeffs:
        acc = acc * z + c
    return acc


def solve_with_roots(system, reals=(), pairs=()):
    """Member of ``system`` vanishing at the given real roots and conjugate pairs, if it is unique."""
    rows = []
    for t in reals:
        rows.append([_value(h, t) for h in system.basis])
    for z in pairs:
        vals = [GaussianRational._coerce(_value(h, z)) for h in system.basis]
        rows.append([v.re for v in vals])
        rows.append([v.im for v in vals])
    ker = linalg.nullspace(rows, system.dim)
    if len(ker) != 1:
        return None
    h = system.combination(ker[0])
    return None if getattr(h, "is_zero", False) else h


def prescribed_root_members(system, n_pairs, shifts=4):
    """Members obtained by prescribing ``dim - 1`` real conditions, ``n_pairs`` of them as conjugate pairs."""
    n_cond = system.dim - 1
    n_real = n_cond - 2 * n_pairs
    if n_real < 0:
        return
    for s in range(shifts):
        reals = _REAL_POINTS[s:s + n_real] if n_real else []
        cpx = _COMPLEX_POINTS[s:s + n_pairs] if n_pairs else []
        if len(reals) < n_real or len(cpx) < n_pairs:
            return
        h = solve_with_roots(system, reals, cpx)
        if h is not None:
            yield h


def sampled_members(system, seed=0, n_random=32, grid_radius=1, shifts=4):
    """Deterministic candidate stream for apolar systems of dimension >= 3."""
    for h in system.basis:
        yield h
    for n_pairs in range(0, (system.dim - 1) // 2 + 1):
        yield from prescribed_root_members(system, n_pairs, shifts)
    for radius in range(1, grid_radius + 1):
        for w in islice(grid_weights(system.dim, radius), 200):
            yield system.combination(w)
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    for _ in range(n_random):
        w = rng.integers(-10, 11, size=system.dim)
        yield system.combination([int(x) for x in w])


# -- label sets ----------------------------------------------------------------


def pencil_labels(g1, g2, structure=STANDARD):
    """Label -> witness over all real members of the pencil ``g1 + lam*g2`` (exact partition)."""
    lams, _, _ = pencil_search_order(g1, g2)
    found = {}
    for lam in lams:
        h = pencil_member(g1, g2, lam)
        lab = classify(h, structure)
        if lab is not None and lab not in found:
            found[lab] = Witness(h.canonical(), lam="inf" if lam is None else lam)
    return found


def label_set(f, structure=STANDARD, seed=0, n_random=32):
    """Labels of all minimal admissible decompositions of ``f`` under ``structure``."""
    structure = RealStructure.parse(structure)
    if structure is FIXED_POINT_FREE:
        return _fpf_label_set(f)
    k, cert = admissible_rank(f)
    system = apolar_system(f, k)
    if system.dim == 1:
        h = system.basis[0]
        lab = classify(h)
        return LabelSet(k, frozenset([lab]), True, structure, "unique", {lab: Witness(h)})
    if system.dim == 2:
        found = pencil_labels(*system.pencil())
        return LabelSet(k, frozenset(found), True, structure, "pencil", found)
    found = {}
    for h in sampled_members(system, seed=seed, n_random=n_random):
        lab = classify(h)
        if lab is not None and lab not in found:
            found[lab] = Witness(h.canonical())
    if not found:
        found[classify(cert)] = Witness(cert)
    return LabelSet(k, frozenset(found), False, structure, "sampled", found)


def min_weight_label(f, structure=STANDARD, **kwargs):
    """Among the (equal-weight) labels, the one with the most real points."""
    ls = label_set(f, structure, **kwargs)
    return max(ls.labels, key=lambda lab: lab.b)


# -- real rank -----------------------------------------------------------------


def _all_real(h, k):
    lab = classify(h)
    return lab is not None and lab.b == k


def real_rank_search(f, seed=0, n_random=64):
    """``(value, witness)`` where value is an int or :class:`IntervalUndecided`."""
    d = f.degree
    lo = None
    # no square-free apolar form exists below the complex rank
    start = complex_rank(f)
    for k in range(start, d + 1):
        system = apolar_system(f, k)
        witness = None
        exact = True
        if system.dim == 1:
            if _all_real(system.basis[0], k):
                witness = system.basis[0]
        elif system.dim == 2:
            g1, g2 = system.pencil()
            lams, _, _ = pencil_search_order(g1, g2)
            for lam in lams:
                h = pencil_member(g1, g2, lam)
                if _all_real(h, k):
                    witness = h
                    break
        else:
            exact = False
            for h in sampled_members(system, seed=seed, n_random=n_random, shifts=8):
                if _all_real(h, k):
                    witness = h
                    break
        if witness is not None:
            if lo is None:
                return k, witness.canonical()
            return IntervalUndecided(lo, k), witness.canonical()
        if not exact and lo is None:
            lo = k
    if d == 1:
        return 1, apolar_system(f, 1).basis[0]
    return IntervalUndecided(lo if lo is not None else d, d), None


def real_rank(f, **kwargs):
    return real_rank_search(f, **kwargs)[0]


# -- fixed-point-free structure --------------------------------------------------


def make_sigma_prime_real(h):
    """``h + sigma'(h)``: a form whose root set is stable under ``z -> -1/conj(z)``."""
    if h.degree % 2:
        raise ValueError("the fixed-point-free involution acts as an involution only in even degree")
    s = sigma_prime_image(h)
    coeffs = [a + b for a, b in zip(h.coeffs, s.coeffs)]
    if not any(coeffs):
        raise ZeroFormError("input is anti-invariant; its symmetrization vanishes")
    return BinaryForm(h.degree, tuple(coeffs))


def _involution_rows(k, sign):
    """Rows of ``P - sign*I`` where ``(P h)_j = (-1)^j h_(k-j)``."""
    rows = []
    for j in range(k + 1):
        r = [Fraction(0)] * (k + 1)
        r[k - j] += (-1) ** j
        r[j] -= sign
        rows.append(r)
    return rows


def sigma_prime_eigenspaces(f, k):
    """Rational apolar forms ``h`` of degree ``k`` with ``P h = h`` and ``P h = -h``."""
    if k > f.degree:
        # every operator of degree above d annihilates f
        return tuple(
            ApolarSystem(f.degree, k, tuple(BinaryForm(k, v) for v in linalg.nullspace(_involution_rows(k, s), k + 1)))
            for s in (1, -1)
        )
    return tuple(apolar_subsystem(f, k, _involution_rows(k, sign)) for sign in (1, -1))


def gaussian_is_squarefree(re_form, im_form):
    coeffs = [GaussianRational(a, b) for a, b in zip(re_form.coeffs, im_form.coeffs)]
    e = next(j for j, c in enumerate(coeffs) if c != 0)
    if e >= 2:
        return False
    p = upoly.trim(reversed(coeffs))
    return len(upoly.gcd_poly(p, upoly.deriv(p))) <= 1


def sigma_prime_witness(f, k):
    """A square-free apolar form of degree ``k`` whose roots are stable under the involution."""
    if k % 2:
        return None
    plus, minus = sigma_prime_eigenspaces(f, k)
    for space in (plus, minus):
        h = squarefree_member(space, max_radius=3)
        if h is not None:
            return Witness(h.canonical())
    for hp in plus.basis:
        for hm in minus.basis:
            for t in (1, 2, -1, Fraction(1, 2), 3, -2):
                hi = hm.scale(t)
                if gaussian_is_squarefree(hp, hi):
                    return Witness(hp, imag=hi)
    return None


def _fpf_label_set(f):
    if not is_sigma_prime_real(f):
        raise NotSigmaStableError("form is not real for the fixed-point-free structure")
    kc = complex_rank(f)
    k = kc + kc % 2
    while k <= f.degree + 2:
        w = sigma_prime_witness(f, k)
        if w is not None:
            lab = Label(k // 2, 0)
            return LabelSet(k, frozenset([lab]), True, FIXED_POINT_FREE, "sigma-prime", {lab: w})
        k += 2
    raise CertificateSearchExhaustedError("no involution-stable square-free apolar form found")


def sigma_prime_admissible_rank(f):
    return _fpf_label_set(f).rank


__all__ = [
    "IntervalUndecided",
    "Label",
    "LabelSet",
    "Witness",
    "border_rank",
    "classify",
    "gaussian_is_squarefree",
    "label_set",
    "label_set_key",
    "make_sigma_prime_real",
    "min_weight_label",
    "pencil_labels",
    "real_rank",
    "real_rank_search",
    "sigma_prime_admissible_rank",
    "sigma_prime_witness",
    "solve_with_roots",
]
