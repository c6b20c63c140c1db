import json
import re
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import rationals
from isingff.exact import PalinPoly, Poly
from isingff.fixtures import load_fixtures, parse_expr
from isingff.formfactors import FormFactorExpr, expression
from isingff.render import from_json, latex_C_term, split_poly, text_C_term, to_json, to_latex, to_text

TABLES = [(n, N) for n in (2, 3, 4) for N in range(0, 4)]


def _table_expr(n, N):
    return expression(n, N) if N else load_fixtures()[(n, N)].as_expression()


def latex_to_plain(fragment: str) -> str:
    """Drop the F basis and rewrite the LaTeX prefactor in the fixture grammar."""
    body = fragment.split(" F_", 1)[0]
    body = re.sub(r"\\frac\{([^{}]*(?:\{[^{}]*\}[^{}]*)*)\}\{([^{}]*(?:\{[^{}]*\}[^{}]*)*)\}", r"(\1)/(\2)", body)
    body = body.replace("\\cdot", "*").replace("{", "").replace("}", "")
    return body


@pytest.mark.parametrize("n,N", TABLES)
def test_latex_terms_read_back_as_the_table(n, N):
    expr = _table_expr(n, N)
    tab = load_fixtures()[(n, N)]
    for m in range(n + 1):
        frag = latex_C_term(expr, m)
        want = tab.terms.get(m, Poly())
        if want.is_zero():
            assert frag == ""
            continue
        assert parse_expr(latex_to_plain(frag)) == want, frag


def test_latex_line_for_f3_N1():
    line = to_latex(expression(3, 1))
    assert "\\frac{3^5}{2^9} t^3 F_2^{3}" in line
    assert line.startswith("\\frac{f^{(3)}_{1,1}}{t^{1/2}} = \\frac{2}{3} \\frac{f^{(1)}_{1,1}}{t^{1/2}}")


def test_latex_prefactors_are_prime_powers():
    line = to_latex(expression(2, 3))
    assert "\\frac{7^4}{2^{15}\\cdot 3}" in line


def test_text_line_for_f2_N0():
    assert to_text(_table_expr(2, 0)) == "f^(2)_{0,0} = (t/4)·F_0·F_1"


@pytest.mark.parametrize("n,N", TABLES)
def test_text_terms_parse_back(n, N):
    expr = _table_expr(n, N)
    line = to_text(expr)
    for m, C in enumerate(expr.C_polys):
        term = text_C_term(expr, m)
        if C.poly.is_zero():
            assert term == ""
            continue
        assert term.lstrip(" +-") in line
        sign = "-" if term.startswith(" -") else ""
        assert parse_expr(sign + term[3:].split("·", 1)[0]) == C.poly


@given(st.lists(rationals, min_size=1, max_size=7), st.integers(0, 3), st.integers(0, 2))
def test_split_poly_reassembles(cs, k, j):
    p = (Poly(cs) * Poly([1, 1]) ** j).shift(k)
    c, kk, jj, core = split_poly(p)
    if p.is_zero():
        assert c == 0
        return
    assert (core * Poly([1, 1]) ** jj).shift(kk).scale(c) == p
    assert core.lc() > 0 and all(x.denominator == 1 for x in core.coeffs)


@pytest.mark.parametrize("n,N", [(2, 1), (3, 2), (4, 3), (2, 0), (5, 2)])
def test_json_round_trip_of_tables(n, N):
    expr = expression(n, N) if n < 5 and N else load_fixtures()[(n, N)].as_expression()
    text = to_json(expr)
    assert from_json(text) == expr
    assert all(isinstance(c, str) for x in json.loads(text)["C"] for c in x["poly"]["coeffs"])


exprs = st.builds(
    lambda n, N, Ks, cs: FormFactorExpr(
        n, N, tuple((K, i) for i, K in enumerate(Ks)), tuple(PalinPoly(Poly(c), 2 * N + m) for m, c in enumerate(cs)), odd=bool(n % 2)
    ),
    st.integers(2, 4),
    st.integers(0, 5),
    st.lists(rationals, max_size=2),
    st.lists(st.lists(rationals, max_size=6), min_size=1, max_size=5),
)


@given(exprs)
def test_json_round_trip_is_exact(expr):
    assert from_json(to_json(expr)) == expr
