"""Input validation shared by the estimator wrappers."""

from fractions import Fraction

from .exceptions import LengthMismatchError, ZeroFormError
from .forms import BinaryForm, parse_form


def check_form(obj):
    """Coerce a form string, :class:`BinaryForm` or coefficient sequence to a :class:`BinaryForm`."""
    if isinstance(obj, BinaryForm):
        return obj
    if isinstance(obj, str):
        return parse_form(obj, canonical=False)
    coeffs = [Fraction(c) if not isinstance(c, float) else Fraction(c).limit_denominator(10**12) for c in obj]
    if not coeffs:
        raise LengthMismatchError("empty coefficient vector")
    if not any(coeffs):
        raise ZeroFormError("all coefficients vanish")
    return BinaryForm(len(coeffs) - 1, tuple(coeffs))


def check_forms(X, degree=None):
    """Validate a batch of forms; ``degree`` (if given) must match every form."""
    if isinstance(X, (str, BinaryForm)):
        raise TypeError("expected a sequence of forms, got a single form")
    if hasattr(X, "tolist"):
        X = X.tolist()
    forms = [check_form(x) for x in X]
    if not forms:
        raise ValueError("no forms given")
    if degree is not None:
        bad = [f.degree for f in forms if f.degree != degree]
        if bad:
            raise LengthMismatchError(f"expected degree {degree}, got {bad[0]}")
    return forms
