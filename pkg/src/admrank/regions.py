"""Monte Carlo exploration of label regions and the boundary witness sequences.

Sampling is split into fixed-size shards whose random streams derive from
``(seed, shard)``; shard results merge by addition, so serial and parallel
runs give identical reports.
"""

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from .exceptions import (
    CertificateSearchExhaustedError,
    DegenerateConfigurationError,
    DegreeOutOfRangeError,
    ZeroFormError,
)
from .forms import BinaryForm, linear_power, multiply
from .labels import Label, label_set, label_set_key, make_sigma_prime_real
from .rank import border_rank, complex_rank, generic_rank, rank_profile
from .realroots import FIXED_POINT_FREE, RealStructure

SHARD_SIZE = 64
PERTURBATIONS = 16
EMPIRICAL_NOTE = "typical labels are an empirical proxy: frequency threshold plus perturbation recurrence"


def default_workers():
    env = os.environ.get("ADMRANK_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _shard_rng(seed, shard):
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(shard,)))


def draw_form(rng, d, bound, structure):
    """Uniform integer coefficients in ``[-bound, bound]``; zero draws are redrawn."""
    while True:
        coeffs = [int(c) for c in rng.integers(-bound, bound + 1, size=d + 1)]
        if not any(coeffs):
            continue
        h = BinaryForm(d, coeffs)
        if structure is FIXED_POINT_FREE:
            try:
                return make_sigma_prime_real(h)
            except ZeroFormError:
                continue
        return h


@dataclass
class SampleOutcome:
    key: str
    labels: tuple
    rank: int
    complex_rank: int
    degenerate: bool


def classify_sample(f, structure, seed=0):
    """Label set of one sample plus its degeneracy flag."""
    g = generic_rank(f.degree)
    try:
        ls = label_set(f, structure, seed=seed)
    except CertificateSearchExhaustedError:
        return SampleOutcome("undecided", (), 0, complex_rank(f), True)
    degenerate = border_rank(f) < g or not ls.exact
    return SampleOutcome(ls.key, tuple(ls.sorted_labels()), ls.rank, complex_rank(f), degenerate)


def _run_shard(args):
    d, structure, seed, shard, count, bound = args
    rng = _shard_rng(seed, shard)
    counts, label_counts, weights = {}, {}, {}
    first = {}
    degenerate = violations = mismatches = 0
    g = generic_rank(d)
    for i in range(count):
        index = shard * SHARD_SIZE + i
        f = draw_form(rng, d, bound, structure)
        out = classify_sample(f, structure, seed=index)
        counts[out.key] = counts.get(out.key, 0) + 1
        if out.degenerate:
            degenerate += 1
            continue
        weights[out.rank] = weights.get(out.rank, 0) + 1
        if out.rank != g:
            violations += 1
        if out.rank != out.complex_rank:
            mismatches += 1
        for lab in out.labels:
            label_counts[lab] = label_counts.get(lab, 0) + 1
            first.setdefault(lab, (index, f))
    return counts, label_counts, weights, first, degenerate, violations, mismatches


def _merge(results):
    counts, label_counts, weights, first = {}, {}, {}, {}
    degenerate = violations = mismatches = 0
    for c, lc, w, fi, dg, vi, mm in results:
        for k, v in c.items():
            counts[k] = counts.get(k, 0) + v
        for k, v in lc.items():
            label_counts[k] = label_counts.get(k, 0) + v
        for k, v in w.items():
            weights[k] = weights.get(k, 0) + v
        for k, v in fi.items():
            if k not in first or v[0] < first[k][0]:
                first[k] = v
        degenerate += dg
        violations += vi
        mismatches += mm
    return counts, label_counts, weights, first, degenerate, violations, mismatches


def perturbation_recurrence(f, label, structure, seed, n=PERTURBATIONS):
    """How many of ``n`` small rational perturbations of ``f`` still carry ``label``."""
    rng = np.random.default_rng([seed, label.a, label.b, 1])
    scale = max(abs(c) for c in f.coeffs) / Fraction(10**6)
    hits = 0
    for _ in range(n):
        while True:
            delta = [int(c) for c in rng.integers(-10, 11, size=f.degree + 1)]
            if any(delta):
                break
        g = BinaryForm(f.degree, delta)
        if structure is FIXED_POINT_FREE:
            try:
                g = make_sigma_prime_real(g)
            except ZeroFormError:
                continue
        pf = f + g.scale(scale)
        if getattr(pf, "is_zero", False):
            continue
        try:
            if label in label_set(pf, structure).labels:
                hits += 1
        except CertificateSearchExhaustedError:
            pass
    return hits


@dataclass
class RegionReport:
    degree: int
    structure: RealStructure
    n_samples: int
    seed: int
    coeff_bound: int
    threshold: float
    counts: dict
    degenerate_count: int
    label_counts: dict
    weight_counts: dict
    weight_violations: int
    rank_mismatches: int = 0
    typical: list = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)

    @property
    def non_degenerate(self):
        return self.n_samples - self.degenerate_count

    def frequency(self, label):
        return self.label_counts.get(label, 0) / self.n_samples

    def to_dict(self):
        return {
            "degree": self.degree,
            "structure": self.structure.value,
            "n_samples": self.n_samples,
            "seed": self.seed,
            "coeff_bound": self.coeff_bound,
            "threshold": self.threshold,
            "counts": dict(sorted(self.counts.items())),
            "degenerate_count": self.degenerate_count,
            "label_counts": {str(k): v for k, v in sorted(self.label_counts.items())},
            "label_frequencies": {str(k): self.frequency(k) for k in sorted(self.label_counts)},
            "weight_counts": {str(k): v for k, v in sorted(self.weight_counts.items())},
            "weight_violations": self.weight_violations,
            "complex_rank_mismatches": self.rank_mismatches,
            "typical_labels": self.typical,
            "witnesses": {str(k): str(v) for k, v in sorted(self.witnesses.items())},
            "note": EMPIRICAL_NOTE,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "count", "frequency"])
        for key, count in sorted(self.counts.items()):
            w.writerow([key, count, count / self.n_samples])
        return buf.getvalue()


def sample_labels(d, structure="standard", n=1000, seed=0, coeff_bound=100, threshold=0.01, workers=None,
                  check_perturbations=True):
    """Label sets of ``n`` random integer forms of degree ``d``, aggregated."""
    structure = RealStructure.parse(structure)
    if d < 2:
        raise DegreeOutOfRangeError("sampling needs degree at least 2")
    if n < 1:
        raise ValueError("n must be positive")
    if structure is FIXED_POINT_FREE and d % 2:
        raise DegreeOutOfRangeError("fixed-point-free sampling needs even degree")
    tasks = []
    for shard in range((n + SHARD_SIZE - 1) // SHARD_SIZE):
        count = min(SHARD_SIZE, n - shard * SHARD_SIZE)
        tasks.append((d, structure, seed, shard, count, coeff_bound))
    workers = default_workers() if workers is None else workers
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
            results = list(pool.map(_run_shard, tasks))
    else:
        results = [_run_shard(t) for t in tasks]
    counts, label_counts, weights, first, degenerate, violations, mismatches = _merge(results)
    report = RegionReport(
        degree=d,
        structure=structure,
        n_samples=n,
        seed=seed,
        coeff_bound=coeff_bound,
        threshold=threshold,
        counts=counts,
        degenerate_count=degenerate,
        label_counts=label_counts,
        weight_counts=weights,
        weight_violations=violations,
        rank_mismatches=mismatches,
        witnesses={lab: v[1] for lab, v in first.items()},
    )
    for lab in sorted(label_counts):
        freq = report.frequency(lab)
        if freq < threshold:
            continue
        hits = perturbation_recurrence(first[lab][1], lab, structure, seed) if check_perturbations else None
        report.typical.append({
            "label": str(lab),
            "frequency": freq,
            "perturbation_hits": hits,
            "perturbations": PERTURBATIONS,
            "typical": hits is None or hits == PERTURBATIONS,
        })
    return report


# -- boundary witness sequences ------------------------------------------------


def curve_point(s, r):
    """``(x + s y)^r``, the point of the curve with parameter ``s``."""
    return linear_power(1, s, r)


def conjugate_track_term(r, u, v, eps):
    """Real form ``(-1)^((r-1)/2) / (2 eps) * ((iU + eps V)^r + (-iU + eps V)^r)`` with ``U = x+uy, V = x+vy``."""
    sign = (-1) ** ((r - 1) // 2)
    total = None
    for j in range(0, r, 2):
        c = sign * comb(r, j) * (-1) ** (j // 2) * Fraction(eps) ** (r - j - 1)
        term = multiply(curve_point(u, j), curve_point(v, r - j)).scale(c)
        total = term if total is None else total + term
    return total


def real_track_term(r, u, v, eps):
    """``((U + eps V)^r - U^r) / eps`` expanded without the cancelling term."""
    total = None
    for j in range(r):
        c = comb(r, j) * Fraction(eps) ** (r - j - 1)
        term = multiply(curve_point(u, j), curve_point(v, r - j)).scale(c)
        total = term if total is None else total + term
    return total


def projective_distance(f, limit):
    """Max coefficient deviation after normalizing both forms at the limit's largest coefficient."""
    pivot = max(range(limit.degree + 1), key=lambda j: (abs(limit.coeffs[j]), -j))
    if f.coeffs[pivot] == 0:
        return None
    a = [c / f.coeffs[pivot] for c in f.coeffs]
    b = [c / limit.coeffs[pivot] for c in limit.coeffs]
    return max(abs(x - y) for x, y in zip(a, b))


def default_epsilons():
    return [Fraction(1, 10**k) for k in range(1, 7)]


@dataclass
class TrackPoint:
    eps: Fraction
    form: BinaryForm
    labels: frozenset
    exact: bool
    distance: Fraction


@dataclass
class BoundarySequence:
    r: int
    u: Fraction
    v: Fraction
    w: Fraction
    base: BinaryForm
    limit: BinaryForm
    conjugate_track: list
    real_track: list
    threshold: Fraction
    limit_profile: object

    def distances_decreasing(self, track):
        ds = [p.distance for p in track]
        return all(a > b for a, b in zip(ds, ds[1:]))

    def to_dict(self):
        def pt(p):
            return {
                "eps": str(p.eps),
                "form": str(p.form.canonical()),
                "labels": [{"a": lab.a, "b": lab.b} for lab in sorted(p.labels, key=lambda x: (-x.a, x.b))],
                "label_set": label_set_key(p.labels),
                "exact": p.exact,
                "distance": str(p.distance),
            }

        prof = self.limit_profile
        return {
            "r": self.r,
            "u": str(self.u),
            "v": str(self.v),
            "w": str(self.w),
            "base": str(self.base.canonical()),
            "limit": str(self.limit.canonical()),
            "conjugate_track": [pt(p) for p in self.conjugate_track],
            "real_track": [pt(p) for p in self.real_track],
            "separation_threshold": None if self.threshold is None else str(self.threshold),
            "limit_profile": {
                "border_rank": prof.border_rank,
                "complex_rank": prof.complex_rank,
                "generic_rank": prof.generic_rank,
                "scheme_label": str(prof.scheme_label) if prof.scheme_label else None,
            },
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)


def boundary_tracks(r, u, v, w, epsilons=None):
    """Two families converging to ``w^r + r u^(r-1) v`` from adjacent label regions."""
    if r % 2 == 0 or r < 5:
        raise DegreeOutOfRangeError("boundary tracks need odd r >= 5")
    u, v, w = Fraction(u), Fraction(v), Fraction(w)
    if len({u, v, w}) < 3:
        raise DegenerateConfigurationError("curve parameters u, v, w must be distinct")
    epsilons = default_epsilons() if epsilons is None else [Fraction(e) for e in epsilons]
    if any(e <= 0 for e in epsilons) or any(a <= b for a, b in zip(epsilons, epsilons[1:])):
        raise ValueError("epsilons must be positive and strictly decreasing")
    base = curve_point(w, r)
    limit = base + multiply(curve_point(u, r - 1), curve_point(v, 1)).scale(r)

    def track(term):
        pts = []
        for eps in epsilons:
            f = base + term(r, u, v, eps)
            ls = label_set(f)
            pts.append(TrackPoint(eps, f, ls.labels, ls.exact, projective_distance(f, limit)))
        return pts

    conj, real = track(conjugate_track_term), track(real_track_term)
    threshold = None
    for p, q in zip(reversed(conj), reversed(real)):
        if p.labels & q.labels:
            break
        threshold = p.eps
    return BoundarySequence(r, u, v, w, base, limit, conj, real, threshold, rank_profile(limit))


__all__ = [
    "BoundarySequence",
    "Label",
    "RegionReport",
    "boundary_tracks",
    "classify_sample",
    "conjugate_track_term",
    "default_epsilons",
    "projective_distance",
    "real_track_term",
    "sample_labels",
]
