"""Reference tables of form factors in the F_N, F_{N+1} basis.

The corpus lives in ``data/tables.txt``; see the header of that file for
the format.  Expressions are parsed by a small recursive-descent evaluator
into exact polynomials.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .exact import PalinPoly, Poly, Series

_TOKEN = re.compile(r"\s*(?:(\d+)|(t)|([-+*/^()]))")


class FixtureParseError(ValueError):
    pass


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise FixtureParseError(f"unexpected character at {pos} in {text!r}")
        out.append(m.group(m.lastindex))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise FixtureParseError(f"expected {expected!r}, got {tok!r}")
        self.i += 1
        return tok

    def parse(self) -> Poly:
        value = self.expr()
        if self.peek() is not None:
            raise FixtureParseError(f"trailing token {self.peek()!r}")
        return value

    def expr(self) -> Poly:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        value = self.term().scale(sign)
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Poly:
        value = self.power()
        while True:
            tok = self.peek()
            if tok == "*":
                self.take()
                value = value * self.power()
            elif tok == "/":
                self.take()
                d = self.power()
                if d.degree != 0:
                    raise FixtureParseError("division by a non-constant")
                value = value.scale(1 / d.coeffs[0])
            elif tok is not None and (tok == "(" or tok == "t" or tok.isdigit()):
                value = value * self.power()
            else:
                return value

    def power(self) -> Poly:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            exp = self.take()
            if not exp.isdigit():
                raise FixtureParseError("exponent must be a nonnegative integer")
            base = base ** int(exp)
        return base

    def atom(self) -> Poly:
        tok = self.take()
        if tok == "t":
            return Poly.t()
        if tok.isdigit():
            return Poly.const(int(tok))
        if tok == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise FixtureParseError(f"unexpected token {tok!r}")


def parse_expr(text: str) -> Poly:
    return _Parser(text).parse()


@dataclass(frozen=True)
class FixtureTable:
    n: int
    N: int
    const: Fraction = Fraction(0)
    lower: tuple[tuple[int, Fraction], ...] = ()
    terms: dict[int, Poly] = field(default_factory=dict)
    errata: dict[int, Poly] = field(default_factory=dict)
    lower_errata: tuple[tuple[int, Fraction], ...] = ()
    source: dict[int, str] = field(default_factory=dict)

    @property
    def odd(self) -> bool:
        return self.n % 2 == 1

    def center(self, m: int) -> int:
        return (self.n // 2) * (2 * self.N + 1) + m

    def C(self, m: int) -> PalinPoly:
        return PalinPoly(self.terms.get(m, Poly()), self.center(m))

    def lower_coefficient(self, k: int) -> Fraction:
        return dict(self.lower).get(k, Fraction(0))

    def printed(self) -> "FixtureTable":
        """The table with every erratum put back to its printed value."""
        from dataclasses import replace

        errata = dict(self.lower_errata)
        lower = tuple((k, errata.get(k, c)) for k, c in self.lower)
        return replace(self, lower=lower, terms={**self.terms, **self.errata})

    def as_expression(self):
        """The table as a FormFactorExpr (for tables that are not constructed)."""
        from .formfactors import FormFactorExpr

        lower = (((self.const, 0),) if self.const else ()) + tuple((c, k) for k, c in self.lower)
        return FormFactorExpr(self.n, self.N, lower, tuple(self.C(m) for m in range(self.n + 1)), odd=self.odd)


def parse_corpus(text: str) -> dict[tuple[int, int], FixtureTable]:
    tables: dict[tuple[int, int], dict] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("table"):
            _, n, N = line.split()
            current = {"n": int(n), "N": int(N), "const": Fraction(0), "lower": [], "terms": {}, "errata": {}, "lower_errata": [], "source": {}}
            tables[(int(n), int(N))] = current
            continue
        if current is None:
            raise FixtureParseError(f"line {lineno}: entry before any table header")
        head, _, body = line.partition(":")
        words = head.split()
        try:
            if words[0] == "const":
                current["const"] = _scalar(parse_expr(body))
            elif words[0] in ("f1", "f2", "f3"):
                current["lower"].append((int(words[0][1]), _scalar(parse_expr(body))))
            elif words[0] == "erratum" and words[1] in ("f1", "f2", "f3"):
                current["lower_errata"].append((int(words[1][1]), _scalar(parse_expr(body))))
            elif words[0] in ("term", "erratum"):
                a, b = int(words[1]), int(words[2])
                if a + b != current["n"]:
                    raise FixtureParseError("exponents must add up to n")
                key = "terms" if words[0] == "term" else "errata"
                current[key][b] = parse_expr(body)
                if words[0] == "term":
                    current["source"][b] = body.strip()
            else:
                raise FixtureParseError(f"unknown entry {words[0]!r}")
        except FixtureParseError as exc:
            raise FixtureParseError(f"line {lineno}: {exc}") from None
    return {
        k: FixtureTable(v["n"], v["N"], v["const"], tuple(v["lower"]), v["terms"], v["errata"],
                        tuple(v["lower_errata"]), v["source"])
        for k, v in tables.items()
    }


def _scalar(p: Poly) -> Fraction:
    if p.degree > 0:
        raise FixtureParseError("constant expected")
    return p.coeffs[0] if p.coeffs else Fraction(0)


@lru_cache(maxsize=1)
def load_fixtures() -> dict[tuple[int, int], FixtureTable]:
    text = resources.files("isingff").joinpath("data/tables.txt").read_text()
    return parse_corpus(text)


def fixture_series(n: int, N: int, order: int, table: FixtureTable | None = None) -> Series:
    """Series of the tabulated expression (odd n normalized by t^(N/2))."""
    from .hyper import F_series
    from .sequences import lam

    tab = table if table is not None else load_fixtures()[(n, N)]
    F0, F1 = F_series(N, order), F_series(N + 1, order)
    total = Series.zero(order) + tab.const
    for k, c in tab.lower:
        if k == 1:
            low = F0 * lam(N)
        else:
            low = fixture_series(k, N, order)
        total = total + low * c
    for m, p in tab.terms.items():
        total = total + Series.from_poly(p, order) * F0 ** (n - m) * F1 ** m
    return total


# ---------------------------------------------------------------------------
# comparison against the constructions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Mismatch:
    n: int
    N: int
    m: int | str
    index: int | None
    expected: Fraction | None
    got: Fraction | None


@dataclass
class FixtureReport:
    compared: list[tuple[int, int, str]] = field(default_factory=list)
    mismatches: list[Mismatch] = field(default_factory=list)
    palindromy_failures: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.palindromy_failures


def _compare_poly(rep: FixtureReport, n, N, m, want: Poly, got: Poly) -> None:
    size = max(len(want.coeffs), len(got.coeffs))
    for k in range(size):
        if want[k] != got[k]:
            rep.mismatches.append(Mismatch(n, N, m, k, want[k], got[k]))
            return


def fixtures_check(oracle_order: int = 12) -> FixtureReport:
    from . import formfactors as ff
    from .oracle import oracle_f

    rep = FixtureReport()
    for (n, N), tab in sorted(load_fixtures().items()):
        for m in range(n + 1):
            if not tab.C(m).is_palindromic():
                rep.palindromy_failures.append((n, N, m))
        if N == 0 or n == 5:
            # no construction here: compare with the integral series instead
            order = oracle_order if N == 0 else 2 * N + 12
            got = oracle_f(n, N, order)
            want = fixture_series(n, N, order)
            for k in range(order):
                if got[k] != want[k]:
                    rep.mismatches.append(Mismatch(n, N, "series", k, want[k], got[k]))
                    break
            rep.compared.append((n, N, "oracle"))
            continue
        expr = ff.expression(n, N)
        for m in range(n + 1):
            _compare_poly(rep, n, N, m, tab.terms.get(m, Poly()), expr.C_polys[m].poly)
        built = dict((k, K) for K, k in expr.lower_terms)
        want = dict(tab.lower)
        if tab.const:
            want[0] = tab.const
        for k in set(built) | set(want):
            if built.get(k, 0) != want.get(k, 0):
                rep.mismatches.append(Mismatch(n, N, f"K{k}", None, want.get(k, 0), built.get(k, 0)))
        rep.compared.append((n, N, "construction"))
    return rep
