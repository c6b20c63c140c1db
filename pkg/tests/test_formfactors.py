from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from isingff.exact import Poly
from isingff.fixtures import load_fixtures
from isingff.formfactors import (
    C2_poly,
    C3_poly,
    C4_construction,
    amplitude2,
    amplitude3,
    assemble,
    c2_coefficients,
    c31_middle_by_cancellation,
    c31_middle_formula,
    cancellation_report,
    expression,
    f2_recursion_series,
    f3_alternative,
)
from isingff.sequences import beta, lam

Ns = st.integers(min_value=1, max_value=6)


def test_amplitudes():
    assert amplitude2(1, 0) == Fraction(-1, 2)
    assert amplitude2(2, 1) == 2 * Fraction(2, 2) * beta(2)
    assert amplitude3(1, 3) == Fraction(2, 3) * lam(1) * beta(1) ** 3


@given(Ns, st.integers(min_value=0, max_value=2))
def test_C2_is_palindromic_with_the_right_degree(N, m):
    C = C2_poly(N, m)
    assert C.is_palindromic()
    assert C.center == 2 * N + 1 + m
    assert C.valuation == m


@given(st.integers(min_value=1, max_value=5), st.integers(min_value=0, max_value=3))
def test_C3_is_palindromic(N, m):
    assert C3_poly(N, m).is_palindromic()


@pytest.mark.parametrize("N", range(1, 5))
def test_C4_is_palindromic(N):
    for m, C in enumerate(C4_construction(N).polys):
        assert C.is_palindromic()
        assert C.center == 4 * N + 2 + m


def test_normalized_c2_starts_at_one():
    for N in range(1, 6):
        for m in range(3):
            assert c2_coefficients(N, m)[0] == 1


def test_c22_example():
    # the F_N^2 coefficient of f^(2)_{2,2}
    assert C2_poly(2, 0).poly == load_fixtures()[(2, 2)].terms[0]


@pytest.mark.parametrize("n,N", [(n, N) for n in (2, 3, 4) for N in (1, 2, 3)] + [(3, 4)])
def test_expression_matches_table(n, N):
    tab = load_fixtures()[(n, N)]
    expr = expression(n, N)
    assert [c.poly for c in expr.C_polys] == [tab.terms.get(m, Poly()) for m in range(n + 1)]


@pytest.mark.parametrize("n,N", [(2, 1), (3, 2), (4, 1)])
def test_lower_constants_match_table(n, N):
    tab = load_fixtures()[(n, N)]
    built = {k: K for K, k in expression(n, N).lower_terms}
    want = dict((k, c) for k, c in tab.lower)
    if tab.const:
        want[0] = tab.const
    assert built == want


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("N", range(1, 7))
def test_cancellation(n, N):
    r = cancellation_report(n, N)
    assert r.ok, r


@pytest.mark.parametrize("N", range(1, 5))
def test_f4_first_nonzero_term_is_at_2N_plus_4(N):
    r = cancellation_report(4, N)
    assert r.ok
    assert r.first_exponent == 2 * N + 4


def test_kbar_grows_with_N():
    # the f^(4) constant Kbar is not N-independent: N(N+2)/8 on every N tried
    for N in range(1, 7):
        assert C4_construction(N).Kbar == Fraction(N * (N + 2), 8)


@pytest.mark.parametrize("N", range(1, 5))
def test_C4_solve_is_consistent_and_log_free(N):
    c = C4_construction(N)
    assert c.consistent and c.log_free


@pytest.mark.parametrize("N", [2, 3, 5])
def test_f2_recursion_in_N(N):
    assert f2_recursion_series(N, 2 * N + 6) == assemble(2, N, 2 * N + 6)


@pytest.mark.parametrize("N", [1, 2, 4])
def test_f3_alternative_form(N):
    assert f3_alternative(N, 2 * N + 6) == assemble(3, N, 2 * N + 6)


def test_displayed_middle_formula_differs_from_cancellation():
    # the closed form for c^(3)_{1;N} does not reproduce the tables; the cancellation rule does
    assert c31_middle_formula(1) == Fraction(9, 4)
    assert c31_middle_by_cancellation(1) == Fraction(15, 8)
    assert C3_poly(1, 1).poly == load_fixtures()[(3, 1)].terms[1]


def test_out_of_range():
    with pytest.raises(ValueError):
        expression(5, 1)
    with pytest.raises(ValueError):
        C2_poly(0, 1)
