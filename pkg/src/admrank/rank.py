"""Sylvester's algorithm: border, cactus, complex and admissible rank of a binary form.

For the rational normal curve the admissible rank (decompositions stable under
complex conjugation) equals the complex rank; the certificate returned with it
is a square-free apolar form with rational coefficients, whose root set is
therefore conjugation-stable.
"""

from dataclasses import dataclass, field
from itertools import product

from . import upoly
from .exceptions import CertificateSearchExhaustedError
from .forms import BinaryForm, apolar_system
from .realroots import (
    count_real_univariate,
    discriminant_in_lambda,
    interval_samples,
    is_squarefree,
    isolate_real_roots,
    pencil_member,
)


def generic_rank(d):
    return (d + 2) // 2


@dataclass(frozen=True)
class SchemeLabel:
    """Label data ``(a, b; parts)`` of a conjugation-stable zero-dimensional scheme.

    ``b`` sums the degrees of the real components and ``2a`` those of the
    non-real ones. ``support_label`` is the label of the reduced support.
    """

    a: int
    b: int
    parts: tuple
    support_label: tuple = (0, 0)

    @property
    def degree(self):
        return sum(self.parts)

    def __str__(self):
        return f"({self.a},{self.b};{','.join(map(str, self.parts))})"


@dataclass(frozen=True)
class RankProfile:
    degree: int
    border_rank: int
    cactus_rank: int
    complex_rank: int
    admissible_rank: int
    generic_rank: int
    rho: int
    certificate: BinaryForm = field(compare=False)
    scheme_label: SchemeLabel = None


def border_rank(f):
    """Smallest ``k >= 1`` with a nonzero apolar form of degree ``k``."""
    for k in range(1, f.degree + 1):
        if apolar_system(f, k).dim:
            return k
    raise ValueError("forms of degree 0 have no border rank")


def minimal_apolar_form(f):
    """The generator of least degree (unique up to scale when ``b <= (d+1)//2``)."""
    b = border_rank(f)
    return apolar_system(f, b).basis[0]


def complex_rank(f):
    d = f.degree
    b = border_rank(f)
    if b <= (d + 1) // 2:
        h = apolar_system(f, b).basis[0]
        return b if is_squarefree(h) else d + 2 - b
    return b


def pencil_search_order(g1, g2):
    """Values of ``lam`` to try in ``g1 + lam*g2``: gap samples, rational roots, then infinity.

    Returns ``(lams, disc, roots)``; ``lams`` is empty if the discriminant
    vanishes identically.
    """
    disc = discriminant_in_lambda(g1, g2)
    if not disc:
        return [], disc, []
    roots = isolate_real_roots(disc)
    samples, rational = interval_samples(disc, roots)
    return samples + rational + [None], disc, roots


_QUICK_LAMBDAS = (0, None, 1, -1, 2, -2)


def _squarefree_in_pencil(g1, g2):
    # generic members are square-free; the full partition is only a fallback
    for lam in _QUICK_LAMBDAS:
        h = pencil_member(g1, g2, lam)
        if not getattr(h, "is_zero", False) and is_squarefree(h):
            return h
    lams, disc, _ = pencil_search_order(g1, g2)
    for lam in lams:
        h = pencil_member(g1, g2, lam)
        if not getattr(h, "is_zero", False) and is_squarefree(h):
            return h
    return None


def grid_weights(dim, radius):
    """Integer weight vectors with max-norm exactly ``radius``, in a fixed order."""
    rng = range(-radius, radius + 1)
    for w in product(rng, repeat=dim):
        if max(abs(c) for c in w) == radius and next(c for c in w if c) > 0:
            yield w


def squarefree_member(system, max_radius=6):
    """Deterministic search for a square-free member of an apolar system."""
    basis = system.basis
    if system.dim == 0:
        return None
    if system.dim == 1:
        return basis[0] if is_squarefree(basis[0]) else None
    if system.operator_degree >= 2:
        h = _squarefree_in_pencil(basis[0], basis[1])
        if h is not None:
            return h
    for radius in range(1, max_radius + 1):
        for w in grid_weights(system.dim, radius):
            h = system.combination(w)
            if not getattr(h, "is_zero", False) and is_squarefree(h):
                return h
    return None


def admissible_rank(f):
    """``(rank, certificate)``: the admissible rank and a rational square-free apolar form of that degree."""
    d = f.degree
    k = complex_rank(f)
    system = apolar_system(f, k)
    if system.dim == 1:
        h = system.basis[0]
        # Sylvester: when the rank equals the border rank the unique generator is square-free
        assert is_squarefree(h)
        return k, h
    h = squarefree_member(system)
    if h is None:
        raise CertificateSearchExhaustedError(f"no square-free member found in Ann(f)_{k}")
    return k, h.canonical()


def scheme_label(h):
    """Scheme-label of the scheme cut out by the apolar form ``h`` (roots with multiplicities)."""
    parts = []
    a = b = 0
    sa = sb = 0
    e = h.multiplicity_at_infinity()
    if e:
        parts.append(e)
        b += e
        sb += 1
    for mult, factor in enumerate(upoly.yun(h.dehomogenize()), start=1):
        if len(factor) <= 1:
            continue
        n = len(factor) - 1
        real = count_real_univariate(factor)
        pairs = (n - real) // 2
        parts.extend([mult] * (real + 2 * pairs))
        b += mult * real
        a += mult * pairs
        sb += real
        sa += pairs
    return SchemeLabel(a, b, tuple(sorted(parts, reverse=True)), (sa, sb))


def scheme_label_of_border_scheme(f):
    """Scheme-label of the unique border-rank scheme, or ``None`` when it is not unique."""
    d = f.degree
    b = border_rank(f)
    if b > (d + 1) // 2:
        return None
    return scheme_label(apolar_system(f, b).basis[0])


def rank_profile(f):
    d = f.degree
    b = border_rank(f)
    k, cert = admissible_rank(f)
    return RankProfile(
        degree=d,
        border_rank=b,
        cactus_rank=b,
        complex_rank=k,
        admissible_rank=k,
        generic_rank=generic_rank(d),
        rho=d + 1,
        certificate=cert,
        scheme_label=scheme_label_of_border_scheme(f),
    )
