"""Text, LaTeX and JSON renderings of form-factor expressions.

Each C polynomial is written as a signed rational prefactor, a power of t,
a power of (t+1) and a primitive integer core, which is the layout of the
reference tables.  The LaTeX writer factors the prefactor into prime powers.
"""
from __future__ import annotations

import json
from fractions import Fraction

from sympy import factorint

from .exact import PalinPoly, Poly, poly_from_json_obj, poly_to_json_obj, rational_from_str, rational_to_str
from .formfactors import FormFactorExpr

T_PLUS_ONE = Poly([1, 1])


def split_poly(p: Poly) -> tuple[Fraction, int, int, Poly]:
    """p = c * t^k * (t+1)^j * core, core primitive with positive leading coefficient."""
    if p.is_zero():
        return Fraction(0), 0, 0, Poly()
    k = p.valuation
    q = Poly(p.coeffs[k:])
    j = 0
    while q.degree > 0 and q(-1) == 0:
        q = q.exact_div(T_PLUS_ONE)
        j += 1
    core = q.primitive()
    c = q.lc() / core.lc()
    return c, k, j, core


# ---------------------------------------------------------------------------
# pieces
# ---------------------------------------------------------------------------


def _core_str(core: Poly, latex: bool) -> str:
    out = []
    for k in range(core.degree, -1, -1):
        c = core[k]
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            mono = ""
        elif k == 1:
            mono = "t"
        else:
            mono = f"t^{{{k}}}" if latex and k > 9 else f"t^{k}"
        body = mono if (mag == 1 and mono) else f"{mag}{mono}"
        sign = "-" if c < 0 else "+"
        out.append(body if not out and c > 0 else sign + body)
    return "".join(out)


def _prime_power_str(n: int, sep: str, braces: bool) -> str:
    if n == 1:
        return "1"
    parts = []
    for p, e in sorted(factorint(n).items()):
        if e == 1:
            parts.append(str(p))
        else:
            parts.append(f"{p}^{{{e}}}" if braces and e > 9 else f"{p}^{e}")
    return sep.join(parts)


def _tail(k: int, j: int, core: Poly, latex: bool) -> str:
    bits = []
    if k:
        bits.append("t" if k == 1 else (f"t^{{{k}}}" if latex and k > 9 else f"t^{k}"))
    if j:
        bits.append("(t+1)" if j == 1 else f"(t+1)^{j}")
    if core.degree > 0:
        bits.append(f"({_core_str(core, latex)})")
    return "".join(bits) if latex else " ".join(bits)


def _basis_str(n: int, N: int, m: int, latex: bool) -> str:
    parts = []
    for idx, e in ((N, n - m), (N + 1, m)):
        if e == 0:
            continue
        name = f"F_{{{idx}}}" if latex and idx > 9 else f"F_{idx}"
        parts.append(name if e == 1 else f"{name}^{{{e}}}" if latex else f"{name}^{e}")
    return (" " if latex else "·").join(parts)


def _lower_str(k: int, N: int, latex: bool) -> str:
    if latex:
        f = f"f^{{({k})}}_{{{N},{N}}}"
        if k % 2 and N:
            return f"\\frac{{{f}}}{{{_half_power(N)}}}"
        return f
    f = f"f^({k})_{{{N},{N}}}"
    return f"{f}/{_half_power(N, latex=False)}" if k % 2 and N else f


def _half_power(N: int, latex: bool = True) -> str:
    if N % 2 == 0:
        e = str(N // 2)
        return "t" if e == "1" else (f"t^{{{e}}}" if latex else f"t^{e}")
    return f"t^{{{N}/2}}" if latex else f"t^({N}/2)"


def _scalar_latex(c: Fraction) -> str:
    sep = "\\cdot "
    num = _prime_power_str(c.numerator, sep, True)
    if c.denominator == 1:
        return num
    den = _prime_power_str(c.denominator, sep, True)
    return f"\\frac{{{num}}}{{{den}}}"


def _signed(c: Fraction, body: str, first: bool) -> str:
    if first:
        return ("-" if c < 0 else "") + body
    return (" - " if c < 0 else " + ") + body


# ---------------------------------------------------------------------------
# whole expressions
# ---------------------------------------------------------------------------


def _lhs(expr: FormFactorExpr, latex: bool) -> str:
    if latex:
        f = f"f^{{({expr.n})}}_{{{expr.N},{expr.N}}}"
        if expr.odd and expr.N:
            return f"\\frac{{{f}}}{{{_half_power(expr.N)}}}"
        return f
    f = f"f^({expr.n})_{{{expr.N},{expr.N}}}"
    return f"{f}/{_half_power(expr.N, latex=False)}" if expr.odd and expr.N else f


def to_text(expr: FormFactorExpr) -> str:
    pieces = []
    for K, k in expr.lower_terms:
        if not K:
            continue
        mag = rational_to_str(abs(K))
        body = mag if k == 0 else f"{mag} {_lower_str(k, expr.N, False)}"
        pieces.append(_signed(K, body, not pieces))
    for m in range(len(expr.C_polys)):
        term = text_C_term(expr, m)
        if term:
            pieces.append(term if pieces else term.lstrip("+ ").replace("- ", "-", 1))
    return f"{_lhs(expr, False)} = " + "".join(pieces)


def text_C_term(expr: FormFactorExpr, m: int) -> str:
    """" + ..." or " - ..." for C_m F_N^(n-m) F_{N+1}^m, or "" when C_m = 0."""
    c, k, j, core = split_poly(expr.C_polys[m].poly)
    if not c:
        return ""
    basis = _basis_str(expr.n, expr.N, m, False)
    if j == 0 and core.degree == 0:
        # a bare monomial reads better as (c t^k)
        num = "" if abs(c.numerator) == 1 else f"{abs(c.numerator)} "
        mono = _tail(k, 0, core, False) or "1"
        inner = f"{num}{mono}" if c.denominator == 1 else f"{num}{mono}/{c.denominator}"
        body = f"({inner})·{basis}"
    else:
        body = f"{rational_to_str(abs(c))} {_tail(k, j, core, False)}·{basis}"
    return _signed(c, body, False)


def latex_terms(expr: FormFactorExpr) -> list[str]:
    """One LaTeX fragment per nonzero term, signs included."""
    out = []
    for K, k in expr.lower_terms:
        if not K:
            continue
        body = _scalar_latex(abs(K)) if k == 0 else f"{_scalar_latex(abs(K))} {_lower_str(k, expr.N, True)}"
        out.append(("-" if K < 0 else "+") + body)
    for m in range(len(expr.C_polys)):
        term = latex_C_term(expr, m)
        if term:
            out.append(term)
    return out


def latex_C_term(expr: FormFactorExpr, m: int) -> str:
    """The signed LaTeX fragment for C_m F_N^(n-m) F_{N+1}^m, or "" when C_m = 0."""
    c, k, j, core = split_poly(expr.C_polys[m].poly)
    if not c:
        return ""
    body = f"{_scalar_latex(abs(c))} {_tail(k, j, core, True)} {_basis_str(expr.n, expr.N, m, True)}"
    return ("-" if c < 0 else "+") + " ".join(body.split())


def to_latex(expr: FormFactorExpr) -> str:
    terms = latex_terms(expr)
    if terms and terms[0].startswith("+"):
        terms[0] = terms[0][1:]
    return f"{_lhs(expr, True)} = " + " ".join(terms)


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------


def to_json_obj(expr: FormFactorExpr) -> dict:
    return {
        "n": expr.n,
        "N": expr.N,
        "odd": expr.odd,
        "lower": [{"K": rational_to_str(K), "order": k} for K, k in expr.lower_terms],
        "C": [{"m": m, "center": C.center, "poly": poly_to_json_obj(C.poly)} for m, C in enumerate(expr.C_polys)],
    }


def from_json_obj(obj: dict) -> FormFactorExpr:
    return FormFactorExpr(
        n=int(obj["n"]),
        N=int(obj["N"]),
        lower_terms=tuple((rational_from_str(x["K"]), int(x["order"])) for x in obj["lower"]),
        C_polys=tuple(PalinPoly(poly_from_json_obj(x["poly"]), int(x["center"])) for x in obj["C"]),
        odd=bool(obj["odd"]),
    )


def to_json(expr: FormFactorExpr) -> str:
    return json.dumps(to_json_obj(expr), sort_keys=True)


def from_json(text: str) -> FormFactorExpr:
    return from_json_obj(json.loads(text))
