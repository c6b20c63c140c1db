from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from conftest import nonzero_polys, polys, rationals, series
from isingff.exact import (
    LogSeries,
    PalinPoly,
    Poly,
    RatFunc,
    Series,
    palin_reflect,
    poly_from_json_obj,
    poly_gcd,
    poly_to_json_obj,
    rational_from_str,
    rational_to_str,
)


# rationals -----------------------------------------------------------------


@given(rationals)
def test_rational_string_round_trip(x):
    s = rational_to_str(x)
    assert rational_from_str(s) == x
    assert ("/" in s) == (x.denominator != 1)


def test_rational_string_form():
    assert rational_to_str(Fraction(-6, 4)) == "-3/2"
    assert rational_to_str(Fraction(8, 4)) == "2"


# polynomials ----------------------------------------------------------------


@given(polys(), polys(), polys())
def test_poly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Poly()


@given(polys(6), nonzero_polys(3))
def test_poly_division_identity(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(nonzero_polys(3), nonzero_polys(3), nonzero_polys(2))
def test_gcd_contains_common_factor(a, b, g):
    d = poly_gcd(a * g, b * g)
    assert d.lc() == 1
    assert ((a * g) % d).is_zero() and ((b * g) % d).is_zero()
    assert (d % g.monic()).is_zero()


def test_gcd_examples():
    t = Poly.t()
    assert poly_gcd((t - 1) * (t + 2), (t - 1) * (t + 3)) == t - 1
    assert poly_gcd(Poly(), t + 2) == t + 2
    assert poly_gcd(t + 1, t + 2) == Poly.const(1)


@given(polys(6), st.integers(min_value=6, max_value=10))
def test_palin_reflect_is_an_involution(p, d):
    assert palin_reflect(palin_reflect(p, d), d) == p


@given(polys(4), st.integers(min_value=8, max_value=10))
def test_symmetrized_poly_is_palindromic(p, d):
    q = p + palin_reflect(p, d)
    assert PalinPoly(q, d).is_palindromic()


def test_palindromy_example():
    assert PalinPoly(Poly([2, 1, 2]).shift(1), 4).is_palindromic()
    assert not PalinPoly(Poly([2, 1, 3]), 2).is_palindromic()


@given(polys(6))
def test_poly_json_round_trip(p):
    assert poly_from_json_obj(poly_to_json_obj(p)) == p


# rational functions -----------------------------------------------------------


@given(nonzero_polys(3), nonzero_polys(3), nonzero_polys(2))
def test_ratfunc_is_reduced_and_monic(a, b, g):
    r = RatFunc(a * g, b * g)
    assert r.den.lc() == 1
    assert poly_gcd(r.num, r.den) == Poly.const(1)
    assert r == RatFunc(a, b)


@given(nonzero_polys(2), nonzero_polys(2), nonzero_polys(2), nonzero_polys(2))
def test_ratfunc_field_operations(a, b, c, d):
    x, y = RatFunc(a, b), RatFunc(c, d)
    assert (x + y) - y == x
    assert (x * y) / y == x
    assert (x * y).derivative() == x.derivative() * y + x * y.derivative()


# series -------------------------------------------------------------------------


@given(series(), series(), series())
def test_series_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(series(0, 0))
def test_series_inverse(a):
    assume(not a.is_zero() and a.val == 0)
    one = a * a.inverse()
    assert one == Series.one(one.order)


@given(series(), series())
def test_series_product_rule(a, b):
    lhs = (a * b).derivative()
    rhs = a.derivative() * b + a * b.derivative()
    assert lhs.truncate(rhs.order) == rhs.truncate(lhs.order)


def test_series_geometric():
    g = Series([1, -1], order=6).inverse()
    assert [g[k] for k in range(6)] == [1] * 6


def test_series_truncation_tracks_order():
    a = Series([1, 2, 3], order=5)
    assert (a * a).order == 5
    assert a.shift(2).order == 7 and a.shift(2).val == 2


@given(series(-2, 3))
def test_series_json_round_trip(s):
    assert Series.from_json_obj(s.to_json_obj()) == s


# log series ---------------------------------------------------------------------


@given(series(0, 1), series(0, 1), series(0, 1), series(0, 1))
def test_logseries_product_rule(a0, a1, b0, b1):
    x, y = LogSeries([a0, a1]), LogSeries([b0, b1])
    lhs = (x * y).derivative()
    rhs = x.derivative() * y + x * y.derivative()
    o = min(lhs.order, rhs.order)
    assert lhs.truncate(o) == rhs.truncate(o)


def test_log_derivative_channel():
    # d/dt (t ln t) = 1 + ln t
    x = LogSeries([Series.zero(6), Series.monomial(1, 1, 6)])
    d = x.derivative()
    assert d.analytic[0] == 1 and d.logpart[0] == 1


def test_log_channels_multiply():
    ln = LogSeries([Series.zero(4), Series.one(4)])
    assert (ln * ln).log_degree == 2


def test_dividing_by_t_is_a_shift():
    x = LogSeries([Series([0, 0, 3], order=6), Series([0, 5], order=6)])
    y = x.shift(-1)
    assert y.analytic[1] == 3 and y.logpart[0] == 5
