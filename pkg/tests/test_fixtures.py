from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import polys
from isingff.exact import Poly
from isingff.fixtures import (
    FixtureParseError,
    fixture_series,
    fixtures_check,
    load_fixtures,
    parse_corpus,
    parse_expr,
)
from isingff.formfactors import expression
from isingff.oracle import oracle_f


def test_parse_examples():
    t = Poly.t()
    assert parse_expr("1/4 t") == t.scale(Fraction(1, 4))
    assert parse_expr("-3^4/2^7 t^2(t+1)") == (t ** 2 * (t + 1)).scale(Fraction(-81, 128))
    assert parse_expr("2^3*t^2+13t+2^3") == Poly([8, 13, 8])
    assert parse_expr("1/(2^3*3)") == Poly.const(Fraction(1, 24))


@given(polys(5))
def test_parser_reads_printed_polynomials(p):
    # Poly.to_str writes "c*t^k" terms joined by + and -
    text = p.to_str().replace("--", "+")
    assert parse_expr(text) == p


@pytest.mark.parametrize("bad", ["t^", "(t+1", "1/t", "x", "t^t", "1 +"])
def test_parse_errors(bad):
    with pytest.raises(FixtureParseError):
        parse_expr(bad)


def test_corpus_errors_carry_line_numbers():
    with pytest.raises(FixtureParseError, match="line 2"):
        parse_corpus("table 2 1\n  term 2 1: t\n")
    with pytest.raises(FixtureParseError, match="before any table"):
        parse_corpus("term 1 1: t\n")


def test_corpus_contents():
    tabs = load_fixtures()
    assert len(tabs) == 16
    assert {n for n, _ in tabs} == {2, 3, 4, 5}
    assert tabs[(2, 2)].C(0).poly == parse_expr("-1/2^6 (t+1)(64t^4+16t^3+99t^2+16t+64)")
    assert tabs[(3, 1)].lower_coefficient(1) == Fraction(2, 3)


def test_every_table_is_palindromic():
    for (n, N), tab in load_fixtures().items():
        for m in range(n + 1):
            assert tab.C(m).is_palindromic(), (n, N, m)


def test_centers():
    tab = load_fixtures()[(3, 2)]
    assert [tab.center(m) for m in range(4)] == [5, 6, 7, 8]


def test_fixture_report_is_clean():
    rep = fixtures_check()
    assert rep.ok, rep.mismatches
    assert len(rep.compared) == 16


# printed values that disagree with both the construction and the integrals -----


ERRATA = [(3, 4), (4, 0), (4, 2), (4, 3), (5, 1), (5, 2), (5, 3)]


@pytest.mark.parametrize("n,N", ERRATA)
def test_printed_tables_disagree_with_the_integrals(n, N):
    tab = load_fixtures()[(n, N)]
    order = 2 * N + 12
    assert fixture_series(n, N, order) == oracle_f(n, N, order)
    assert fixture_series(n, N, order, table=tab.printed()) != oracle_f(n, N, order)


@pytest.mark.parametrize("n,N", [(3, 4), (4, 2), (4, 3)])
def test_corrected_entries_are_the_constructed_ones(n, N):
    tab = load_fixtures()[(n, N)]
    expr = expression(n, N)
    for m in tab.errata:
        assert expr.C_polys[m].poly == tab.terms[m]
        assert expr.C_polys[m].poly != tab.errata[m]
