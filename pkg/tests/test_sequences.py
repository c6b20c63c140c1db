from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from isingff.sequences import (
    a_coeff,
    a_coeff_second_form,
    b_coeff,
    beta,
    f2_leading,
    f3_leading,
    harmonic_partial,
    k_coeff,
    lam,
    pochhammer,
    selberg_leading,
)
from isingff.verify import a_coeff_forms_check, harmonic_middle_check, open_question_suite

Ns = st.integers(min_value=1, max_value=12)


def test_pochhammer_values():
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    assert pochhammer(5, 0) == 1
    with pytest.raises(ValueError):
        pochhammer(1, -1)


@given(Ns)
def test_lambda_is_central_binomial_over_four_to_the_N(N):
    assert lam(N) == Fraction(comb(2 * N, N), 4 ** N)


def test_structure_constants():
    assert lam(0) == 1 and lam(1) == Fraction(1, 2) and lam(2) == Fraction(3, 8)
    assert beta(1) == Fraction(9, 8)
    assert beta(2) == Fraction(25, 24)


@given(Ns, st.integers(min_value=0, max_value=15))
def test_b_coeff_closed_form(N, n):
    want = pochhammer(Fraction(1, 2), n) * pochhammer(N + Fraction(1, 2), n) / (pochhammer(N + 1, n) * factorial(n))
    assert b_coeff(N, n) == want


def test_a_coeff_examples():
    assert all(a_coeff(N, 0) == 1 for N in range(1, 6))
    assert a_coeff(2, 1) == Fraction(3, 4)
    with pytest.raises(ValueError):
        a_coeff(2, 2)


@given(Ns, st.data())
def test_a_coeff_matches_pochhammer_quotient(N, data):
    n = data.draw(st.integers(min_value=0, max_value=N - 1))
    half = Fraction(1, 2)
    want = pochhammer(half, n) * pochhammer(half - N, n) / (pochhammer(1 - N, n) * factorial(n))
    assert a_coeff(N, n) == want


def test_harmonic_partial():
    assert harmonic_partial(1, 3) == Fraction(11, 6)
    assert harmonic_partial(Fraction(1, 2), 2) == 2 + Fraction(2, 3)
    assert k_coeff(1, 0) == 1 - 2


@pytest.mark.parametrize("N", range(0, 7))
def test_selberg_matches_closed_forms(N):
    assert selberg_leading(2, N).coefficient == f2_leading(N)
    assert selberg_leading(3, N).coefficient == f3_leading(N)
    assert selberg_leading(2, N).exponent == N + 1
    assert selberg_leading(3, N).exponent == Fraction(3 * N, 2) + 2


def test_selberg_examples():
    assert f2_leading(1) == Fraction(3, 64)
    assert f3_leading(1) == Fraction(1, 1024)


# open questions: reported as findings, never as build failures -----------------


def test_second_form_of_a_coeff_is_reported():
    f = a_coeff_forms_check(2)
    assert not f.holds
    assert f.witness == (1, "3/4", "3/8")
    assert a_coeff_second_form(2, 1) == Fraction(3, 8)


def test_harmonic_closed_form_holds():
    assert all(harmonic_middle_check(N).holds for N in range(1, 9))


def test_open_question_suite_lists_both_identities():
    names = {f.name for f in open_question_suite(range(1, 4))}
    assert len(names) == 2
