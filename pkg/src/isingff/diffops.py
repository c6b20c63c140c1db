"""Linear differential operators sum_k r_k(t) D^k with rational-function coefficients.

Operators compose as in the Weyl algebra; ``a @ b`` means "apply b, then a".
Minimal annihilators of solution products are computed by differentiating a
vector in a finite module (monomials in y, y' of each factor) and finding the
first Q(t)-linear dependency.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb
from typing import Iterable, Sequence

from .exact import LogSeries, Poly, RatFunc, Series, poly_from_json_obj, poly_to_json_obj

Coeff = RatFunc


def _rf(x) -> RatFunc:
    return RatFunc.coerce(x)


class DiffOp:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        c = [_rf(x) for x in coeffs]
        while len(c) > 1 and c[-1].is_zero():
            c.pop()
        if not c:
            c = [RatFunc(Poly())]
        self.coeffs = tuple(c)

    # constructors -------------------------------------------------------
    @classmethod
    def mult(cls, r) -> "DiffOp":
        return cls([r])

    @classmethod
    def d(cls) -> "DiffOp":
        return cls([0, 1])

    @classmethod
    def t_power(cls, k: int, c=1) -> "DiffOp":
        return cls([RatFunc.t_power(k, c)])

    @classmethod
    def identity(cls) -> "DiffOp":
        return cls([1])

    # inspection ---------------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_zero()

    def leading(self) -> RatFunc:
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> RatFunc:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return RatFunc(Poly())

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            terms.append(f"[{c}]*D^{k}")
        return "DiffOp(" + (" + ".join(terms) or "0") + ")"

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, DiffOp):
            other = DiffOp.mult(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return DiffOp([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return DiffOp([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, DiffOp):
            other = DiffOp.mult(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def left_mul(self, r) -> "DiffOp":
        """Multiply on the left by a rational function."""
        r = _rf(r)
        return DiffOp([r * c for c in self.coeffs])

    def __mul__(self, r):
        if isinstance(r, DiffOp):
            return self @ r
        return self.left_mul(r)

    __rmul__ = left_mul

    def __matmul__(self, other: "DiffOp") -> "DiffOp":
        return op_compose(self, other)

    # application ---------------------------------------------------------
    def apply(self, x):
        return op_apply(self, x)

    def __call__(self, x):
        return op_apply(self, x)


def op_add(a: DiffOp, b: DiffOp) -> DiffOp:
    return a + b


def op_compose(a: DiffOp, b: DiffOp) -> DiffOp:
    """Operator a o b.  Uses D^i r = sum_l C(i,l) r^(l) D^(i-l)."""
    out: dict[int, RatFunc] = {}
    b_derivs: list[list[RatFunc]] = []
    for bj in b.coeffs:
        ds = [bj]
        for _ in range(a.order):
            ds.append(ds[-1].derivative())
        b_derivs.append(ds)
    for i, ai in enumerate(a.coeffs):
        if ai.is_zero():
            continue
        for j, ds in enumerate(b_derivs):
            for l in range(i + 1):
                r = ds[l]
                if r.is_zero():
                    continue
                k = i - l + j
                term = ai * r * comb(i, l)
                out[k] = term if k not in out else out[k] + term
    if not out:
        return DiffOp([0])
    return DiffOp([out.get(k, RatFunc(Poly())) for k in range(max(out) + 1)])


def op_pow(a: DiffOp, n: int) -> DiffOp:
    out = DiffOp.identity()
    for _ in range(n):
        out = out @ a
    return out


def _apply_rat(r: RatFunc, x: LogSeries, target: int) -> LogSeries:
    if r.is_zero():
        return LogSeries([Series.zero(target)])
    xv = x.valuation()
    if xv is None:
        return LogSeries([Series.zero(min(target, x.order + r.valuation()))])
    rv = r.valuation()
    rs = r.to_series(max(x.order - xv + rv, rv + 1))
    return x * LogSeries([rs])


def op_apply(op: DiffOp, x) -> LogSeries | Series:
    """Apply op to a Series or LogSeries; the result keeps only exactly known terms."""
    plain = isinstance(x, Series)
    if plain:
        x = LogSeries([x])
    deriv = x
    acc = None
    for k, r in enumerate(op.coeffs):
        if k:
            deriv = deriv.derivative()
        if r.is_zero():
            continue
        term = _apply_rat(r, deriv, deriv.order)
        acc = term if acc is None else acc + term
    if acc is None:
        acc = LogSeries([Series.zero(x.order - op.order)])
    if plain:
        if acc.log_degree:
            raise ArithmeticError("log channel appeared from a plain series")
        return acc.analytic
    return acc


def op_divmod_right(a: DiffOp, b: DiffOp) -> tuple[DiffOp, DiffOp]:
    """a = q o b + r with ord r < ord b."""
    if b.is_zero():
        raise ZeroDivisionError("right division by the zero operator")
    q = DiffOp([0])
    r = a
    lb = b.leading()
    while not r.is_zero() and r.order >= b.order:
        k = r.order - b.order
        c = r.leading() / lb
        term = DiffOp([0] * k + [c])
        q = q + term
        r = r - term @ b
        if r.order >= b.order + k and not r.is_zero() and r.order == b.order + k:
            # leading term must have cancelled; guard against drift
            if not r.coeffs[-1].is_zero():
                raise ArithmeticError("right division failed to cancel the leading term")
    return q, r


def op_normalize(op: DiffOp) -> DiffOp:
    """Clear denominators and content: integer polynomial coefficients, positive lc."""
    if op.is_zero():
        return op
    from math import gcd

    den = Poly.const(1)
    for c in op.coeffs:
        if not c.is_zero():
            den = den * c.den.exact_div(_poly_gcd_safe(den, c.den))
    polys = [(c * RatFunc(den)).num for c in op.coeffs]
    # remove the polynomial gcd of all coefficients
    g = Poly()
    for p in polys:
        if not p.is_zero():
            g = p if g.is_zero() else _poly_gcd_safe(g, p)
    if not g.is_zero() and g.degree > 0:
        polys = [p.exact_div(g) if not p.is_zero() else p for p in polys]
    content = Fraction(0)
    num = 0
    from math import lcm

    dl = 1
    for p in polys:
        for c in p.coeffs:
            num = gcd(num, c.numerator)
            dl = lcm(dl, c.denominator)
    scale = Fraction(dl, num) if num else Fraction(1)
    polys = [p.scale(scale) for p in polys]
    if polys[-1].lc() < 0:
        polys = [-p for p in polys]
    return DiffOp([RatFunc(p, _reduced=True) for p in polys])


def _poly_gcd_safe(a: Poly, b: Poly) -> Poly:
    from .exact import poly_gcd

    return poly_gcd(a, b)


def op_equal_up_to_left_factor(a: DiffOp, b: DiffOp) -> bool:
    return op_normalize(a) == op_normalize(b)


def op_conjugate(op: DiffOp, k) -> DiffOp:
    """t^(-k) o op o t^k for rational k, via D -> D + k/t."""
    k = Fraction(k)
    shifted = DiffOp([RatFunc.t_power(-1, k), 1])
    out = DiffOp([0])
    power = DiffOp.identity()
    for i, r in enumerate(op.coeffs):
        if i:
            power = shifted @ power
        if not r.is_zero():
            out = out + power.left_mul(r)
    return out


def indicial_polynomial(op: DiffOp) -> Poly:
    """Polynomial in s whose roots are the local exponents at t = 0."""
    lows = []
    for k, r in enumerate(op.coeffs):
        if r.is_zero():
            continue
        lows.append((r.valuation() - k, k, r.leading_at_zero()))
    m = min(v for v, _, _ in lows)
    s = Poly([0, 1])
    out = Poly()
    for v, k, c in lows:
        if v != m:
            continue
        falling = Poly.const(1)
        for j in range(k):
            falling = falling * (s - j)
        out = out + falling.scale(c)
    return out


def rational_roots(p: Poly) -> list[Fraction]:
    """All rational roots with multiplicity."""
    from math import isqrt

    roots: list[Fraction] = []
    p = p.primitive()
    while p.degree > 0 and p[0] == 0:
        roots.append(Fraction(0))
        p = p.shift(-1)
    if p.degree <= 0:
        return sorted(roots)
    a0 = abs(int(p[0]))
    an = abs(int(p.lc()))

    def divisors(n):
        out = set()
        for d in range(1, isqrt(n) + 1):
            if n % d == 0:
                out.add(d)
                out.add(n // d)
        return out

    cands = set()
    for q in divisors(an):
        for num in divisors(a0):
            cands.add(Fraction(num, q))
            cands.add(Fraction(-num, q))
    for c in sorted(cands):
        while p.degree > 0 and p(c) == 0:
            roots.append(c)
            p = p.exact_div(Poly([-c, 1]))
    return sorted(roots)


def indicial_exponents(op: DiffOp) -> list[Fraction]:
    return rational_roots(indicial_polynomial(op))


# ---------------------------------------------------------------------------
# Minimal annihilators via a finite differential module
# ---------------------------------------------------------------------------


class ProductModule:
    """Span of products of solutions, one factor group per distinct second-order operator.

    A group (op, m) contributes the symmetric monomials y^(m-b) y'^b, b = 0..m.
    Basis elements are tuples of b-values, one per group.
    """

    def __init__(self, groups: Sequence[tuple[DiffOp, int]]):
        self.groups = []
        for op, m in groups:
            if op.order != 2:
                raise ValueError("symmetric constructions need second-order factors")
            lc = op.leading()
            p = op[1] / lc
            q = op[0] / lc
            self.groups.append((p, q, m))
        self.basis = list(product(*[range(m + 1) for _, _, m in self.groups]))
        self.index = {b: i for i, b in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def unit(self) -> list[RatFunc]:
        v = [RatFunc(Poly())] * self.dim
        v[self.index[tuple(0 for _ in self.groups)]] = RatFunc(Poly.const(1))
        return v

    def derivative(self, vec: Sequence[RatFunc]) -> list[RatFunc]:
        out = [c.derivative() for c in vec]
        for i, c in enumerate(vec):
            if c.is_zero():
                continue
            b = self.basis[i]
            for g, (p, q, m) in enumerate(self.groups):
                bg = b[g]
                a = m - bg
                if a > 0:
                    nb = b[:g] + (bg + 1,) + b[g + 1 :]
                    j = self.index[nb]
                    out[j] = out[j] + c * a
                if bg > 0:
                    out[i] = out[i] - c * p * bg
                    nb = b[:g] + (bg - 1,) + b[g + 1 :]
                    j = self.index[nb]
                    out[j] = out[j] - c * q * bg
        return out

    def apply_op(self, op: DiffOp, vec: Sequence[RatFunc]) -> list[RatFunc]:
        acc = [RatFunc(Poly())] * self.dim
        cur = list(vec)
        for k, r in enumerate(op.coeffs):
            if k:
                cur = self.derivative(cur)
            if r.is_zero():
                continue
            acc = [x + r * y for x, y in zip(acc, cur)]
        return acc


def _common_denominator(vec: Sequence[RatFunc]) -> Poly:
    den = Poly.const(1)
    for c in vec:
        if not c.is_zero() and c.den.degree > 0:
            den = den * c.den.exact_div(_poly_gcd_safe(den, c.den))
    return den


def _first_dependency(module: ProductModule, start: Sequence[RatFunc], max_order: int | None = None) -> DiffOp:
    """Smallest-order monic operator L with L(start) = 0 in the module.

    Fraction-free: each derivative vector is scaled to polynomial entries and
    reduced against earlier pivots by cross multiplication; only the final
    combination is turned back into rational functions.
    """
    limit = module.dim if max_order is None else max_order
    rows: list[tuple[int, list[Poly], list[Poly]]] = []
    scales: list[Poly] = []
    vec = list(start)
    zero = Poly()
    for k in range(limit + 1):
        d = _common_denominator(vec)
        scales.append(d)
        v = [(c * RatFunc(d)).num for c in vec]
        comb_vec = [zero] * (limit + 1)
        comb_vec[k] = Poly.const(1)
        for piv, rv, rc in rows:
            a = v[piv]
            if a.is_zero():
                continue
            b = rv[piv]
            v = [x * b - y * a for x, y in zip(v, rv)]
            comb_vec = [x * b - y * a for x, y in zip(comb_vec, rc)]
            v, comb_vec = _strip_content(v, comb_vec)
        piv = next((i for i, x in enumerate(v) if not x.is_zero()), None)
        if piv is None:
            coeffs = [RatFunc(comb_vec[j] * scales[j]) for j in range(k + 1)]
            lead = coeffs[-1]
            return DiffOp([c / lead for c in coeffs])
        rows.append((piv, v, comb_vec))
        vec = module.derivative(vec)
    raise ArithmeticError("no dependency found within the module dimension")


def _strip_content(v: list[Poly], w: list[Poly]) -> tuple[list[Poly], list[Poly]]:
    """Divide both vectors by the common polynomial gcd of all their entries."""
    g = Poly()
    for p in (*v, *w):
        if p.is_zero():
            continue
        g = p.monic() if g.is_zero() else _poly_gcd_safe(g, p)
        if g.degree == 0:
            break
    if g.is_zero():
        return v, w
    if g.degree > 0:
        v = [p.exact_div(g) if not p.is_zero() else p for p in v]
        w = [p.exact_div(g) if not p.is_zero() else p for p in w]
    content = Poly([c for p in (*v, *w) for c in p.coeffs]).content() if any(not p.is_zero() for p in (*v, *w)) else 1
    if content != 1:
        v = [p.scale(1 / content) for p in v]
        w = [p.scale(1 / content) for p in w]
    return v, w


def symmetric_power(op2: DiffOp, k: int) -> DiffOp:
    if k == 1:
        lc = op2.leading()
        return DiffOp([c / lc for c in op2.coeffs])
    m = ProductModule([(op2, k)])
    return _first_dependency(m, m.unit())


def symmetric_product(ops: Sequence[DiffOp]) -> DiffOp:
    """Minimal annihilator of products y_1 ... y_r with L_i y_i = 0."""
    groups: list[list] = []
    for op in ops:
        for g in groups:
            if op_normalize(g[0]) == op_normalize(op):
                g[1] += 1
                break
        else:
            groups.append([op, 1])
    m = ProductModule([(g[0], g[1]) for g in groups])
    return _first_dependency(m, m.unit())


def minimal_annihilator_of_image(ops: Sequence[DiffOp], intertwiner: DiffOp) -> DiffOp:
    """Minimal operator annihilating J(y) for every product y of solutions of ops."""
    groups: list[list] = []
    for op in ops:
        for g in groups:
            if op_normalize(g[0]) == op_normalize(op):
                g[1] += 1
                break
        else:
            groups.append([op, 1])
    m = ProductModule([(g[0], g[1]) for g in groups])
    start = m.apply_op(intertwiner, m.unit())
    return _first_dependency(m, start)


def identity_check(lhs: Sequence[DiffOp], rhs: Sequence[DiffOp]) -> DiffOp:
    """(product of lhs) - (product of rhs), composition read left to right."""

    def chain(ops):
        out = DiffOp.identity()
        for o in ops:
            out = out @ o
        return out

    return chain(lhs) - chain(rhs)


def op_to_json_obj(op: DiffOp) -> dict:
    """{"coeffs": [{"num": poly, "den": poly}, ...]} with coeffs[k] multiplying D^k."""
    return {"coeffs": [{"num": poly_to_json_obj(c.num), "den": poly_to_json_obj(c.den)} for c in op.coeffs]}


def op_from_json_obj(obj: dict) -> DiffOp:
    return DiffOp([RatFunc(poly_from_json_obj(c["num"]), poly_from_json_obj(c["den"])) for c in obj["coeffs"]])
