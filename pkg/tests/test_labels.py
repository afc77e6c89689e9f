import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from admrank.exceptions import NotSigmaStableError, ZeroFormError
from admrank.forms import BinaryForm, apolar_system, contract, is_sigma_prime_real, monomial
from admrank.labels import (
    IntervalUndecided,
    Label,
    gaussian_is_squarefree,
    label_set,
    label_set_key,
    make_sigma_prime_real,
    min_weight_label,
    pencil_labels,
    real_rank,
    real_rank_search,
    sigma_prime_witness,
    solve_with_roots,
)
from admrank.rank import admissible_rank, complex_rank
from admrank.realroots import count_real_roots, is_squarefree, pencil_member
from admrank.upoly import GaussianRational
from conftest import forms, random_form


def validate(f, ls):
    """Every label is realized by an apolar square-free witness of the right shape."""
    for lab, w in ls.witnesses.items():
        assert lab.weight == ls.rank
        if w.imag is None:
            assert not contract(w.form, f)
            rc = count_real_roots(w.form, ls.structure)
            assert rc.is_squarefree and (rc.conj_pairs, rc.real_distinct) == (lab.a, lab.b)
        else:
            assert not contract(w.form, f) and not contract(w.imag, f)
            assert gaussian_is_squarefree(w.form, w.imag)
    assert set(ls.witnesses) == set(ls.labels)


def test_two_label_quartic(q):
    ls = label_set(q)
    assert ls.labels == {Label(1, 1), Label(0, 3)}
    assert ls.exact and ls.rank == 3 and ls.mode == "pencil"
    assert ls.key == "{(1,1),(0,3)}"
    validate(q, ls)


def test_quadric_examples():
    f = BinaryForm(2, (1, 0, -1))
    ls = label_set(f)
    assert ls.labels == {Label(1, 0), Label(0, 2)} and ls.exact
    validate(f, ls)
    g = BinaryForm(2, (1, 0, 1))
    ls = label_set(g)
    assert ls.labels == {Label(0, 2)} and ls.exact
    validate(g, ls)


def test_label_validation():
    assert Label(2, 1).weight == 5 and str(Label(2, 1)) == "(2,1)"
    with pytest.raises(ValueError):
        Label(0, 0)
    with pytest.raises(ValueError):
        Label(-1, 3)
    assert label_set_key({Label(0, 3), Label(1, 1)}) == "{(1,1),(0,3)}"


def test_sampled_mode_is_flagged():
    f = monomial(3, 1)
    ls = label_set(f)
    assert not ls.exact and ls.mode == "sampled" and ls.rank == 3
    assert Label(0, 3) in ls.labels
    validate(f, ls)


@given(forms(2, 6, 20))
def test_labels_have_uniform_weight_and_valid_witnesses(f):
    ls = label_set(f)
    assert ls.rank == admissible_rank(f)[0]
    validate(f, ls)


def test_pencil_partition_is_complete():
    rng = random.Random(5)
    for _ in range(12):
        f = random_form(rng, rng.choice([2, 4, 6]), 30)
        k = admissible_rank(f)[0]
        system = apolar_system(f, k)
        if system.dim != 2:
            continue
        ls = label_set(f)
        g1, g2 = system.pencil()
        for _ in range(100):
            lam = Fraction(rng.randint(-400, 400), rng.randint(1, 40))
            h = pencil_member(g1, g2, lam)
            if h and is_squarefree(h):
                rc = count_real_roots(h)
                assert Label(rc.conj_pairs, rc.real_distinct) in ls.labels


def test_real_rank_examples(q):
    assert real_rank(BinaryForm(2, (1, 0, 1))) == 2
    assert real_rank(q) == 3
    value, witness = real_rank_search(monomial(3, 1))
    assert value == 3
    assert not contract(witness, monomial(3, 1)) and count_real_roots(witness).real_distinct == 3


def test_real_rank_of_monomials_is_degree():
    # x^(d-1) y needs d real points
    for d in range(2, 6):
        assert real_rank(monomial(d, 1)) == d


@given(forms(2, 6, 20))
def test_real_rank_against_labels(f):
    ls = label_set(f)
    value = real_rank(f)
    k = ls.rank
    if isinstance(value, IntervalUndecided):
        assert k <= value.lo <= value.hi <= f.degree
        return
    assert k <= value <= max(f.degree, 1)
    if ls.exact:
        assert (value == k) == (Label(0, k) in ls.labels)


def test_min_weight_label(q):
    assert min_weight_label(q) == Label(0, 3)
    assert min_weight_label(BinaryForm(2, (1, 0, 1))) == Label(0, 2)
    assert min_weight_label(BinaryForm(4, (1, 0, 0, 0, 1)), "fpf") == Label(1, 0)


def test_make_sigma_prime_real_examples():
    assert make_sigma_prime_real(monomial(2, 0)) == BinaryForm(2, (1, 0, 1))
    assert make_sigma_prime_real(monomial(4, 0)) == BinaryForm(4, (1, 0, 0, 0, 1))
    assert make_sigma_prime_real(monomial(4, 2)) == BinaryForm(4, (0, 0, 2, 0, 0))
    with pytest.raises(ZeroFormError):
        make_sigma_prime_real(BinaryForm(2, (1, 0, -1)))
    with pytest.raises(ValueError):
        make_sigma_prime_real(monomial(3, 0))


@given(st.sampled_from([2, 4, 6]).flatmap(
    lambda d: st.lists(st.integers(-9, 9), min_size=d + 1, max_size=d + 1)))
def test_fixed_point_free_labels(coeffs):
    d = len(coeffs) - 1
    try:
        f = make_sigma_prime_real(BinaryForm(d, coeffs) if any(coeffs) else monomial(d, 0))
    except ZeroFormError:
        return
    assert is_sigma_prime_real(f)
    ls = label_set(f, "fpf")
    assert ls.rank % 2 == 0 and ls.rank >= complex_rank(f)
    assert all(lab.b == 0 for lab in ls.labels) and ls.exact
    validate(f, ls)


def test_fixed_point_free_rejects_nonreal_forms():
    with pytest.raises(NotSigmaStableError):
        label_set(BinaryForm(2, (1, 0, 2)), "fpf")


def test_fixed_point_free_witness_is_stable():
    f = make_sigma_prime_real(BinaryForm(6, (3, -1, 4, 1, -5, 9, 2)))
    w = sigma_prime_witness(f, label_set(f, "fpf").rank)
    assert is_sigma_prime_real(w.form)


def test_gaussian_squarefree():
    x2, y2 = monomial(2, 0), monomial(2, 2)
    assert gaussian_is_squarefree(x2, y2)  # x^2 + i y^2
    assert gaussian_is_squarefree(x2, monomial(2, 1))  # x (x + i y)
    # x^2 - y^2 + 2i xy = (x + i y)^2
    assert not gaussian_is_squarefree(BinaryForm(2, (1, 0, -1)), BinaryForm(2, (0, 2, 0)))
    assert not gaussian_is_squarefree(monomial(3, 3), monomial(3, 2))  # y^2 (i x + y)


def test_prescribed_roots():
    f = monomial(5, 1)
    system = apolar_system(f, 5)
    h = solve_with_roots(system, reals=[Fraction(0), Fraction(1), Fraction(-1)], pairs=[GaussianRational(0, 1)])
    assert h is not None and not contract(h, f)
    assert h(0, 1) == 0 and h(1, 1) == 0


def test_pencil_labels_records_first_witness(q):
    g1, g2 = apolar_system(q, 3).pencil()
    found = pencil_labels(g1, g2)
    assert set(found) == {Label(1, 1), Label(0, 3)}
    for w in found.values():
        assert w.lam is not None
