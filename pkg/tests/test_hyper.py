from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from isingff.exact import LogSeries, Series
from isingff.hyper import (
    BasisBundle,
    F_series,
    hyp2f1_series,
    u1_series,
    u2_logseries,
    w2_series,
    wronskian_power,
    wronskian_residual,
)
from isingff.operators import O2
from isingff.sequences import lam


@pytest.mark.parametrize("N", [0, 1, 3])
def test_F_series_against_mpmath(N):
    s = F_series(N, 40)
    t = Fraction(1, 10)
    partial = sum(s[k] * t ** k for k in range(40))
    exact = mpmath.hyp2f1(0.5, N + 0.5, N + 1, 0.1)
    assert abs(float(partial) - float(exact)) < 1e-30 + 1e-14


def test_F0_first_coefficients():
    assert [F_series(0, 4)[k] for k in range(4)] == [1, Fraction(1, 4), Fraction(9, 64), Fraction(25, 256)]


@given(st.integers(min_value=0, max_value=6))
def test_F_series_is_2F1(N):
    assert F_series(N, 10) == hyp2f1_series(Fraction(1, 2), N + Fraction(1, 2), N + 1, 10)


@pytest.mark.parametrize("N", range(1, 6))
def test_u1_and_u2_solve_O2(N):
    order = N + 12
    op = O2(N)
    assert op(LogSeries([u1_series(N, order)])).is_zero()
    assert op(u2_logseries(N, order)).is_zero()


@pytest.mark.parametrize("N", range(1, 5))
def test_u2_log_channel(N):
    u2 = u2_logseries(N, 12)
    assert u2.logpart == u1_series(N, 12) * (-N * lam(N) ** 2)
    assert u2.analytic == w2_series(N, 12)
    assert u2.analytic[1] == 1


@pytest.mark.parametrize("N", range(1, 7))
def test_wronskian(N):
    assert wronskian_residual(N, N + 10).is_zero()


@pytest.mark.parametrize("N", range(1, 5))
@pytest.mark.parametrize("n", [2, 3, 4])
def test_powered_wronskian(N, n):
    assert (wronskian_power(N, n, N + 10) - LogSeries([Series.one(N + 10)])).is_zero()


def test_bundle_is_consistent():
    b = BasisBundle.build(2, 10)
    assert b.u1_N == F_series(2, 7).shift(3)
