"""Palindromic coefficient polynomials and assembly of the form factors.

Even form factors are exact series in t.  Odd ones are always carried in the
normalized form f / t^(N/2), so every exponent stays integral.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .exact import LogSeries, PalinPoly, Poly, Series
from .hyper import F_series, u1_series, u2_logseries
from .sequences import a_coeff, beta, harmonic_partial, lam, selberg_leading

ZERO = Fraction(0)


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def _head(x: LogSeries, shift: int, count: int) -> list[Fraction]:
    """Coefficients 0..count-1 of t^(-shift) x; log channels must vanish there."""
    y = x.shift(-shift)
    if y.order < count:
        raise ValueError("product not expanded far enough")
    for j in range(1, len(y.channels)):
        ch = y.channels[j]
        if any(ch[k] for k in range(count)):
            raise ArithmeticError(f"ln^{j} channel reaches the analytic head")
    return [y.analytic[k] for k in range(count)]


def _palin_fill(head: dict[int, Fraction], center: int) -> Poly:
    """Polynomial with c_k = head[k] and c_{center-k} = c_k."""
    coeffs = [ZERO] * (center + 1)
    for k, v in head.items():
        if not 0 <= k <= center:
            raise ValueError("index outside the palindromy window")
        mirror = center - k
        coeffs[k] = v
        coeffs[mirror] = v
    out = Poly(coeffs)
    for k, v in head.items():
        if coeffs[center - k] != v:
            raise ArithmeticError("inconsistent palindromic data")
    return out


def _u(N: int, order: int) -> LogSeries:
    return u2_logseries(N, order)


def _u1(N: int, order: int) -> LogSeries:
    return LogSeries([u1_series(N, order)])


# ---------------------------------------------------------------------------
# amplitudes and constants
# ---------------------------------------------------------------------------


def amplitude2(N: int, m: int) -> Fraction:
    return Fraction((-1) ** (m + 1) * comb(2, m)) * Fraction(N, 2) * beta(N) ** m


def amplitude3(N: int, m: int) -> Fraction:
    return Fraction((-1) ** (m + 1) * comb(3, m)) * Fraction(2, 3) * lam(N) * beta(N) ** m


def K2_0(N: int) -> Fraction:
    return Fraction(N, 2)


def K3_0(N: int) -> Fraction:
    return Fraction(3 * N + 1, 6)


# ---------------------------------------------------------------------------
# C^(2)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def c2_coefficients(N: int, m: int) -> tuple[Fraction, ...]:
    """Normalized coefficients c^(2)_{m;n}, n = 0 .. 2N+1-m."""
    if N < 1:
        raise ValueError("C^(2) is constructed for N >= 1")
    o = N + 4
    if m == 2:
        head = _head(_u(N, o) ** 2, 2, N)
        center = 2 * N - 1
        data = dict(enumerate(head))
    elif m == 1:
        head = _head(_u(N, o) * _u(N + 1, o), 2, N)
        data = dict(enumerate(head))
        data[N] = lam(N) ** 2 + c2_coefficients(N, 2)[N - 1]
        center = 2 * N
    elif m == 0:
        head = _head(_u(N + 1, o) ** 2, 2, N + 1)
        data = dict(enumerate(head))
        center = 2 * N + 1
    else:
        raise ValueError("m must be 0, 1 or 2")
    coeffs = _palin_fill(data, center).coeffs
    return coeffs + (ZERO,) * (center + 1 - len(coeffs))


@lru_cache(maxsize=None)
def C2_poly(N: int, m: int) -> PalinPoly:
    if N < 1:
        raise ValueError("C^(2) is constructed for N >= 1; use the fixture table at N = 0")
    core = Poly(c2_coefficients(N, m)).shift(m).scale(amplitude2(N, m))
    return PalinPoly(core, 2 * N + 1 + m)


def c2_middle_closed_form(N: int) -> Fraction:
    """The closed form lam_N^2 2N H_N(1/2) claimed for c^(2)_{2;N-1}."""
    return lam(N) ** 2 * 2 * N * harmonic_partial(Fraction(1, 2), N)


# ---------------------------------------------------------------------------
# C^(3)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _c3_heads(N: int) -> dict[int, list[Fraction]]:
    o = 2 * N + 6
    uN, uN1, u1N = _u(N, o), _u(N + 1, o), _u1(N, o)
    s = N + 4
    return {
        3: _head(uN ** 3 * u1N, s, N),
        2: _head(uN ** 2 * uN1 * u1N, s, N),
        1: _head(uN * uN1 ** 2 * u1N, s, N),
        0: _head(uN1 ** 3 * u1N, s, N + 1),
    }


def c31_middle_formula(N: int) -> Fraction:
    """Closed expression claimed for the middle coefficient c^(3)_{1;N}."""
    b, l = beta(N), lam(N)
    h = _c3_heads(N)
    c3_3 = h[3]
    c3_2 = h[2]
    c2_2 = c2_coefficients(N, 2)
    c33_nm2 = c3_3[N - 2] if N >= 2 else ZERO
    return (
        b * l ** 2 / N
        + b * l * ((N - 1) * c3_2[N - 1] + 4 * c2_2[N - 1])
        - Fraction(2, 3) * b * l / N ** 2 * (2 * N * N * c33_nm2 + (N * N - Fraction(1, 4)) * c3_3[N - 1])
    )


def _c3_core(N: int, m: int, middle: Fraction | None) -> Poly:
    h = _c3_heads(N)
    data = dict(enumerate(h[m]))
    center = {3: 2 * N - 2, 2: 2 * N - 1, 1: 2 * N, 0: 2 * N + 1}[m]
    if m == 1:
        data[N] = ZERO if middle is None else middle
    if m == 3:
        data = {k: v for k, v in data.items() if k <= center}
    return _palin_fill(data, center)


@lru_cache(maxsize=None)
def c31_middle_by_cancellation(N: int) -> Fraction:
    """Choose c^(3)_{1;N} so the t^(N+1) term of f^(3)/t^(N/2) vanishes."""
    o = N + 3
    base = _assemble3_with_middle(N, ZERO, o)
    unit = _assemble3_with_middle(N, Fraction(1), o) - base
    slope = unit[N + 1]
    if slope == 0:
        raise ArithmeticError("middle coefficient does not reach t^(N+1)")
    return -base[N + 1] / slope


def _C3_from_middle(N: int, m: int, middle: Fraction) -> Poly:
    core = _c3_core(N, m, middle).shift(m).scale(amplitude3(N, m))
    if m < 3:
        core = core + C2_poly(N, m).poly.scale(Fraction(N - 1, N) * lam(N))
    return core


@lru_cache(maxsize=None)
def C3_poly(N: int, m: int, middle_rule: str = "cancellation") -> PalinPoly:
    if N < 1:
        raise ValueError("C^(3) is constructed for N >= 1; use the fixture table at N = 0")
    if middle_rule == "cancellation":
        mid = c31_middle_by_cancellation(N)
    elif middle_rule == "formula":
        mid = c31_middle_formula(N)
    else:
        raise ValueError("middle_rule is 'cancellation' or 'formula'")
    return PalinPoly(_C3_from_middle(N, m, mid), 2 * N + 1 + m)


def _basis_sum(polys: list[Poly], N: int, order: int) -> Series:
    n = len(polys) - 1
    F0 = F_series(N, order)
    F1 = F_series(N + 1, order)
    total = Series.zero(order)
    for m, p in enumerate(polys):
        if p.is_zero():
            continue
        term = Series.from_poly(p, order) * (F0 ** (n - m)) * (F1 ** m)
        total = total + term
    return total


def _assemble3_with_middle(N: int, middle: Fraction, order: int) -> Series:
    polys = [_C3_from_middle(N, m, middle) for m in range(4)]
    return F_series(N, order) * (K3_0(N) * lam(N)) + _basis_sum(polys, N, order)


# ---------------------------------------------------------------------------
# C^(4)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class C4Construction:
    N: int
    Kbar: Fraction
    K0: Fraction
    K1: Fraction
    middle2: Fraction
    polys: tuple[PalinPoly, ...]
    residual_order: int
    consistent: bool
    log_free: bool


def _c4_expressions(N: int, order: int) -> tuple[list[LogSeries], list[LogSeries]]:
    """Return (X_m, Y_m) with the solve expression E_m = Kbar X_m + Y_m."""
    o = order + 6
    uN = _u(N, o)
    uN1 = _u(N + 1, o)
    FN = LogSeries([F_series(N, o)])
    FN1 = LogSeries([F_series(N + 1, o)])
    C0, C1, C2 = (LogSeries([Series.from_poly(C2_poly(N, m).poly, o)]) for m in range(3))
    b = beta(N)
    nl2 = N * lam(N) ** 2
    third = Fraction(2, 3)
    g = Fraction(4, N)

    def tp(k):
        return k  # marker for readability of shifts

    X: list[LogSeries] = []
    Y: list[LogSeries] = []

    # m = 0
    X.append(-(uN1 ** 4).shift(-4) - C0 * (uN1 ** 2).shift(-2) * g)
    Y.append(
        (C0 * (uN1 ** 2).shift(-2)
         - C0 * (uN1 ** 2 * uN).shift(-2) * FN1 * (2 * b)
         - C1 * (uN1 ** 3).shift(-3) * FN1) * third
        + (uN1 ** 3).shift(N + 2 - 4) * FN1 * (nl2 / 3 * b)
    )
    # m = 1
    X.append(
        (uN1 ** 3 * uN).shift(-3) * (4 * b)
        + (C0 * (uN1 * uN).shift(-1) * (2 * b) - C1 * (uN1 ** 2).shift(-2)) * g
    )
    Y.append(
        (C0 * (uN1 * uN ** 2).shift(-1) * FN1 * (6 * b ** 2)
         + C1 * (uN1 ** 3).shift(-3) * FN * 2
         - C2 * (uN1 ** 3).shift(-3) * FN1 * 2) * third
        - ((uN1 ** 3).shift(N + 1 - 3) * FN * b
           + (uN1 ** 2 * uN).shift(N + 2 - 3) * FN1 * (3 * b ** 2)) * (nl2 / 3)
    )
    # m = 2
    bracket2 = (
        C0 * uN ** 2 * b ** 2
        - C1 * (uN1 * uN).shift(-1) * (2 * b)
        + C2 * (uN1 ** 2).shift(-2)
    )
    X.append(-(uN1 ** 2 * uN ** 2).shift(-2) * (6 * b ** 2) - bracket2 * g)
    Y.append(
        -bracket2 * 2
        + (-(C0 * uN ** 3 * FN1) * (6 * b ** 3)
           - C1 * (uN1 * uN).shift(-1) * (9 * b)
           + C2 * (uN1 ** 3).shift(-3) * FN * 6) * third
        + ((uN1 ** 2 * uN).shift(N + 1 - 2) * FN * (3 * b ** 2)
           + (uN1 * uN ** 2).shift(N + 2 - 2) * FN1 * (3 * b ** 3)) * (nl2 / 3)
    )
    # m = 3
    X.append(
        (uN1 * uN ** 3).shift(-1) * (4 * b ** 3)
        - (C1 * uN ** 2 * b ** 2 - C2 * (uN1 * uN).shift(-1) * (2 * b)) * g
    )
    Y.append(
        (C0 * uN ** 3 * FN * (2 * b ** 3)
         - C1 * uN ** 3 * FN1 * (2 * b ** 3)
         - C2 * (uN1 ** 2 * uN).shift(-2) * FN * (6 * b)) * third
        - ((uN1 * uN ** 2).shift(N + 1 - 1) * FN * (3 * b ** 3)
           + (uN ** 3).shift(N + 2 - 1) * FN1 * b ** 4) * (nl2 / 3)
    )
    # m = 4
    X.append(-(uN ** 4) * b ** 4 - C2 * uN ** 2 * (g * b ** 2))
    Y.append(
        (C1 * uN ** 3 * FN * b ** 3
         + C2 * (uN1 * uN ** 2).shift(-1) * FN * (2 * b ** 2)
         + C2 * uN ** 2 * b ** 2) * third
        + (uN ** 3).shift(N + 1) * FN * (nl2 / 3 * b ** 4)
    )
    return X, Y


C4_KNOWN_THROUGH = {0: 1, 1: 1, 2: 1, 3: 2, 4: 3}  # offset above 2N


def _c4_heads(N: int, use_analytic_only: bool = False):
    top = 2 * N + 4
    X, Y = _c4_expressions(N, top)
    heads = []
    log_free = True
    for m in range(5):
        last = 2 * N + C4_KNOWN_THROUGH[m]
        xs, ys = X[m], Y[m]
        for ls in (xs, ys):
            for j in range(1, len(ls.channels)):
                if any(ls.channels[j][k] for k in range(last + 1)):
                    log_free = False
        if not log_free and not use_analytic_only:
            raise ArithmeticError(f"log channel of C^(4)_{m} expression reaches t^{last}")
        heads.append(([xs.analytic[k] for k in range(last + 1)], [ys.analytic[k] for k in range(last + 1)]))
    return heads, log_free


def _solve_linear(rows: list[list[Fraction]], rhs: list[Fraction]) -> tuple[list[Fraction], bool]:
    """Least-structure exact solve; returns (solution, consistent)."""
    n = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    consistent = all(row[-1] == 0 for row in aug[r:])
    if len(piv_cols) < n:
        raise ArithmeticError("linear system for the f^(4) constants is underdetermined")
    sol = [ZERO] * n
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][-1]
    return sol, consistent


@lru_cache(maxsize=None)
def C4_construction(N: int) -> C4Construction:
    if N < 1:
        raise ValueError("C^(4) is constructed for N >= 1; use the fixture table at N = 0")
    heads, log_free = _c4_heads(N)
    top = 2 * N + 4  # equations for t^0 .. t^(2N+3)

    def polys_for(kbar: Fraction, mid: Fraction) -> list[Poly]:
        out = []
        for m in range(5):
            xs, ys = heads[m]
            data = {k: kbar * x + y for k, (x, y) in enumerate(zip(xs, ys))}
            center = 4 * N + 2 + m
            if m == 2:
                data[2 * N + 2] = mid
            out.append(_palin_fill(data, center))
        return out

    f2 = assemble(2, N, top)

    def residual(kbar, k0, k1, mid) -> Series:
        s = _basis_sum(polys_for(kbar, mid), N, top) + f2 * k1
        return s + k0

    base = residual(ZERO, ZERO, ZERO, ZERO)
    cols = [
        residual(Fraction(1), ZERO, ZERO, ZERO) - base,
        residual(ZERO, Fraction(1), ZERO, ZERO) - base,
        residual(ZERO, ZERO, Fraction(1), ZERO) - base,
        residual(ZERO, ZERO, ZERO, Fraction(1)) - base,
    ]
    rows = [[c[k] for c in cols] for k in range(top)]
    rhs = [-base[k] for k in range(top)]
    (kbar, k0, k1, mid), consistent = _solve_linear(rows, rhs)
    polys = tuple(PalinPoly(p, 4 * N + 2 + m) for m, p in enumerate(polys_for(kbar, mid)))
    return C4Construction(N, kbar, k0, k1, mid, polys, top, consistent, log_free)


def C4_poly(N: int, m: int) -> PalinPoly:
    return C4_construction(N).polys[m]


# ---------------------------------------------------------------------------
# assembly
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FormFactorExpr:
    """K-constants times lower form factors plus C polynomials in the F_N, F_{N+1} basis."""

    n: int
    N: int
    lower_terms: tuple[tuple[Fraction, int], ...]  # (K, order of the lower form factor)
    C_polys: tuple[PalinPoly, ...]
    odd: bool = field(default=False)


def expression(n: int, N: int) -> FormFactorExpr:
    if n == 2:
        return FormFactorExpr(2, N, ((K2_0(N), 0),), tuple(C2_poly(N, m) for m in range(3)))
    if n == 3:
        return FormFactorExpr(3, N, ((K3_0(N), 1),), tuple(C3_poly(N, m) for m in range(4)), odd=True)
    if n == 4:
        c = C4_construction(N)
        return FormFactorExpr(4, N, ((c.K0, 0), (c.K1, 2)), c.polys)
    raise ValueError("constructive range is n = 2, 3, 4")


def f1_normalized(N: int, order: int) -> Series:
    """f^(1) / t^(N/2) = lam_N F_N"""
    return F_series(N, order) * lam(N)


def assemble(n: int, N: int, order: int) -> Series:
    """f^(n) (even n) or f^(n)/t^(N/2) (odd n) as an exact truncated series."""
    expr = expression(n, N)
    total = _basis_sum([c.poly for c in expr.C_polys], N, order)
    for K, lower in expr.lower_terms:
        if lower == 0:
            total = total + K
        elif lower == 1:
            total = total + f1_normalized(N, order) * K
        else:
            total = total + assemble(lower, N, order) * K
    return total


def f2_recursion_series(N: int, order: int) -> Series:
    """N f^(2)_{1,1} - (N/2) sum_j lam_j lam_{j+1} t^(j+1) F_j F_{j+1} / (j(j+1))."""
    if N < 1:
        raise ValueError("the recursion starts at N = 1")
    total = assemble(2, 1, order) * N
    for j in range(1, N):
        term = (F_series(j, order) * F_series(j + 1, order)).shift(j + 1).truncate(order)
        total = total - term * (Fraction(N, 2) * lam(j) * lam(j + 1) / (j * (j + 1)))
    return total


def f3_alternative(N: int, order: int) -> Series:
    """(2/3 + (N-1)/N f^(2)) lam F_N + sum Cbar_m F_N^(3-m) F_{N+1}^m."""
    mid = c31_middle_by_cancellation(N)
    bars = [_c3_core(N, m, mid).shift(m).scale(amplitude3(N, m)) for m in range(4)]
    pref = assemble(2, N, order) * Fraction(N - 1, N) + Fraction(2, 3)
    return pref * f1_normalized(N, order) + _basis_sum(bars, N, order)


# ---------------------------------------------------------------------------
# cancellation report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CancellationReport:
    n: int
    N: int
    vanishes_through: int
    required_through: int
    first_exponent: Fraction
    expected_exponent: Fraction
    first_coefficient: Fraction
    expected_coefficient: Fraction

    @property
    def ok(self) -> bool:
        return (
            self.vanishes_through >= self.required_through
            and self.first_exponent == self.expected_exponent
            and self.first_coefficient == self.expected_coefficient
        )


def cancellation_report(n: int, N: int) -> CancellationReport:
    sel = selberg_leading(n, N)
    if n % 2:
        shift = Fraction(N, 2)
        required = N + 1
    else:
        shift = Fraction(0)
        required = N if n == 2 else 2 * N + 3
    expected_exp = sel.exponent - shift
    order = int(expected_exp) + 2
    s = assemble(n, N, order)
    v = s.valuation
    first = Fraction(v) if v is not None else Fraction(order)
    return CancellationReport(
        n=n,
        N=N,
        vanishes_through=(v - 1) if v is not None else order - 1,
        required_through=required,
        first_exponent=first,
        expected_exponent=expected_exp,
        first_coefficient=s[v] if v is not None else ZERO,
        expected_coefficient=sel.coefficient,
    )
