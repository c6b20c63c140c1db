from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import rationals
from isingff.diffops import (
    DiffOp,
    indicial_exponents,
    minimal_annihilator_of_image,
    op_conjugate,
    op_divmod_right,
    op_from_json_obj,
    op_normalize,
    op_to_json_obj,
    rational_roots,
    symmetric_power,
    symmetric_product,
)
from isingff.exact import LogSeries, Poly, RatFunc, Series
from isingff.hyper import u1_series, u2_logseries
from isingff.odes import reflection_check
from isingff.operators import CATALOG, L2, O2, Omega2, build_named

coef = st.lists(rationals, min_size=1, max_size=3).map(Poly)
ops = st.lists(coef, min_size=1, max_size=3).map(DiffOp)


@given(ops, ops, ops)
def test_composition_is_associative(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)


@given(ops, ops)
def test_composition_distributes(a, b):
    c = DiffOp([Poly([1, 2]), 1])
    assert c @ (a + b) == c @ a + c @ b


@given(ops, ops, st.lists(rationals, min_size=1, max_size=8))
def test_composition_matches_application(a, b, cs):
    x = Series(cs, order=10)
    lhs = (a @ b)(x)
    rhs = a(b(x))
    o = min(lhs.order, rhs.order)
    assert lhs.truncate(o) == rhs.truncate(o)


@given(ops, ops)
def test_right_division(a, b):
    if b.is_zero():
        return
    q, r = op_divmod_right(a, b)
    assert q @ b + r == a
    assert r.is_zero() or r.order < b.order


def test_leibniz():
    # D o t = t D + 1
    assert DiffOp.d() @ DiffOp.t_power(1) == DiffOp([1, Poly.t()])


@given(ops)
def test_normalize_is_invariant_under_left_factors(a):
    if a.is_zero():
        return
    f = RatFunc(Poly([3, 0, 1]), Poly([1, -2]))
    assert op_normalize(a.left_mul(f)) == op_normalize(a)


@given(ops)
def test_operator_json_round_trip(a):
    assert op_from_json_obj(op_to_json_obj(a)) == a


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_catalog_json_round_trip(name):
    op = build_named(name, 2)
    assert op_from_json_obj(op_to_json_obj(op)) == op


def test_build_named_errors():
    with pytest.raises(KeyError):
        build_named("nope", 1)
    with pytest.raises(ValueError):
        build_named("O2", -1)


@given(st.fractions(min_value=-5, max_value=5, max_denominator=4))
def test_conjugation_acts_on_monomials(k):
    # t^(-k) D t^k applied to t^s gives (s + k) t^(s-1)
    conj = op_conjugate(DiffOp.d(), k)
    assert conj == DiffOp([RatFunc.t_power(-1, k), 1])


def test_rational_roots():
    p = Poly([-6, 1]) * Poly([1, 2]) * Poly([0, 1]) * Poly([0, 1])
    assert rational_roots(p) == [Fraction(-1, 2), 0, 0, 6]


@pytest.mark.parametrize("N", [1, 2, 3])
def test_O2_exponents(N):
    # u1 = t^(N+1)(...); u2 = t + ... with a log channel in the t^(N+1) tower
    assert indicial_exponents(O2(N)) == [1, N + 1]


@pytest.mark.parametrize("N", [1, 2])
def test_symmetric_square_kills_products(N):
    S = symmetric_power(O2(N), 2)
    assert S.order == 3
    o = 2 * N + 12
    u1 = LogSeries([u1_series(N, o)])
    u2 = u2_logseries(N, o)
    for y in (u1 * u1, u1 * u2, u2 * u2):
        assert S(y).is_zero()


@pytest.mark.parametrize("N", [1, 2])
def test_symmetric_product_kills_mixed_products(N):
    S = symmetric_product([O2(N), O2(N + 1)])
    assert S.order == 4
    o = 2 * N + 14
    y = u2_logseries(N, o) * u2_logseries(N + 1, o)
    assert S(y).is_zero()


def test_minimal_annihilator_of_identity_image_is_the_operator():
    M = minimal_annihilator_of_image([O2(2)], DiffOp.identity())
    assert op_normalize(M) == op_normalize(O2(2))


@pytest.mark.parametrize("N", [1, 2, 3])
@pytest.mark.parametrize("m", [0, 1, 2])
def test_substitution_symmetry(N, m):
    # t -> 1/t maps Omega2_m to a left multiple of itself (palindromic solutions)
    assert reflection_check(N, m).holds
