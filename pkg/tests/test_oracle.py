from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from isingff.fixtures import fixture_series
from isingff.formfactors import assemble, f1_normalized
from isingff.oracle import MomentKey, beta_half, moment_series, oracle_f
from isingff.sequences import selberg_leading


def test_beta_half_values():
    # B(1/2, 1/2) = pi, B(3/2, 1/2) = pi/2
    assert beta_half(Fraction(1, 2), Fraction(1, 2)) == 1
    assert beta_half(Fraction(3, 2), Fraction(1, 2)) == Fraction(1, 2)


@pytest.mark.parametrize("p,eps", [(0, Fraction(-1, 2)), (2, Fraction(1, 2)), (1, Fraction(-1, 2))])
def test_moment_series_by_quadrature(p, eps):
    key = MomentKey(p, Fraction(-1, 2), -eps, eps)
    s = moment_series(key, 6)
    t = 0.05
    approx = sum(float(s[k]) * t ** k for k in range(6))
    f = lambda x: x ** (p - 0.5) * (1 - x) ** float(-eps) * (1 - t * x) ** float(eps)
    exact = mpmath.quad(f, [0, 1]) / mpmath.pi
    assert abs(approx - float(exact)) < 1e-8


@pytest.mark.parametrize("N", range(0, 5))
def test_one_fold_integral_is_lambda_F(N):
    assert oracle_f(1, N, 10) == f1_normalized(N, 10)


@pytest.mark.parametrize("n,N", [(2, 0), (3, 0), (4, 0)])
def test_oracle_reproduces_N0_tables(n, N):
    assert oracle_f(n, N, 12) == fixture_series(n, N, 12)


@pytest.mark.parametrize("n,N", [(2, 1), (2, 3), (3, 1), (3, 2), (4, 1)])
def test_oracle_equals_construction(n, N):
    order = 2 * N + 8
    assert oracle_f(n, N, order) == assemble(n, N, order)


@given(st.integers(min_value=0, max_value=5), st.sampled_from([2, 3]))
def test_oracle_leading_term_is_selberg(N, n):
    sel = selberg_leading(n, N)
    e = sel.exponent - (Fraction(N, 2) if n % 2 else 0)
    s = oracle_f(n, N, int(e) + 1)
    assert s.valuation == e
    assert s[int(e)] == sel.coefficient


def test_oracle_rejects_bad_n():
    with pytest.raises(ValueError):
        oracle_f(0, 1, 4)
