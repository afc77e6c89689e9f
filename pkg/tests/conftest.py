from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from admrank.forms import BinaryForm, make_form

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

Q_COEFFS = [Fraction(3, 5), Fraction(7, 5), Fraction(4, 3), Fraction(5, 4), Fraction(1)]
Q_TEXT = "4:3/5,7/5,4/3,5/4,1"

# reference generators of Ann(q) in degree 3
G1 = BinaryForm(3, (0, 12915, -29088, 6220))
G2 = BinaryForm(3, (1435, 0, -5652, 1264))

# reference discriminant of g1 + lam*g2, lowest degree first
REFERENCE_DISC = (
    0,
    -125609767833135474000,
    -179185496017480948800,
    -88301578772786601600,
    -18287158078605830400,
    -1359731348267443200,
)


@pytest.fixture
def q():
    return make_form(4, Q_COEFFS)


def forms(min_degree=1, max_degree=8, bound=50):
    """Hypothesis strategy for nonzero integer forms."""

    @st.composite
    def build(draw):
        d = draw(st.integers(min_degree, max_degree))
        coeffs = draw(st.lists(st.integers(-bound, bound), min_size=d + 1, max_size=d + 1))
        if not any(coeffs):
            coeffs[0] = 1
        return BinaryForm(d, coeffs)

    return build()


def random_form(rng, d, bound=100):
    while True:
        c = [rng.randint(-bound, bound) for _ in range(d + 1)]
        if any(c):
            return BinaryForm(d, c)


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
