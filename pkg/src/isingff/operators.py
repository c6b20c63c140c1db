"""Catalog of named differential operators."""
from __future__ import annotations

from fractions import Fraction as Fr

from .diffops import DiffOp, op_compose
from .exact import Poly, RatFunc

T = Poly([0, 1])
ONE = Poly([1])


def _p(*coeffs) -> Poly:
    return Poly(coeffs)


def _r(num, den=None) -> RatFunc:
    if not isinstance(num, Poly):
        num = Poly.const(num)
    if den is None:
        return RatFunc(num)
    if not isinstance(den, Poly):
        den = Poly.const(den)
    return RatFunc(num, den)


def tpow(k: int) -> Poly:
    return Poly.monomial(k)


def O2(N: int) -> DiffOp:
    # D^2 - (1+N-Nt)/(t(1-t)) D + (4+4N-t-2Nt)/(4t^2(1-t))
    t1mt = _p(0, 1, -1)
    return DiffOp([
        _r(_p(4 + 4 * N, -1 - 2 * N), t1mt * T * 4),
        _r(-_p(1 + N, -N), t1mt),
        1,
    ])


def L2(N: int) -> DiffOp:
    # D^2 + (2t-1)/((t-1)t) D - 1/(4t) + 1/(4(t-1)) - N^2/(4t^2)
    tm1 = _p(-1, 1)
    c0 = _r(-1, T * 4) + _r(1, tm1 * 4) + _r(Fr(-N * N, 4), tpow(2))
    return DiffOp([c0, _r(_p(-1, 2), tm1 * T), 1])


def L4(N: int) -> DiffOp:
    tm1 = _p(-1, 1)
    n2 = N * N
    c4 = _r(1)
    c3 = _r(_p(-1, 2) * 10, tm1 * T)
    c2 = _r(_p(46, -241, 241), tm1 ** 2 * tpow(2) * 2) + _r(Fr(-5 * n2, 2), tpow(2))
    c1 = _r(_p(-1, 2) * _p(9, -122, 122), tm1 ** 3 * tpow(3)) + _r(_p(23, -32) * n2, tm1 * tpow(3) * 2)
    c0 = (
        _r(_p(-1, 5) * _p(-4, 5) * Fr(81, 16), tpow(3) * tm1 ** 3)
        + _r(_p(8, -17) * Fr(9 * n2, 8), tm1 * tpow(4))
        + _r(Fr(9 * n2 * n2, 16), tpow(4))
    )
    return DiffOp([c0, c1, c2, c3, c4])


def Q(N: int) -> DiffOp:
    tm1 = _p(-1, 1)
    n2 = N * N
    c3 = _r(tm1 * T)
    c2 = _r(_p(-1, 2) * Fr(7, 2))
    c1 = _r(_p(6, -41, 41), tm1 * T * 4) + _r(tm1 * Fr(-9 * n2, 4), T)
    c0 = _r(_p(-1, 2) * Fr(9, 8), tm1 * T) + _r(_p(-1, 2) * Fr(-9 * n2, 8), tpow(2))
    return DiffOp([c0, c1, c2, c3])


def R(N: int) -> DiffOp:
    tm1 = _p(-1, 1)
    n2 = N * N
    c3 = _r(tm1 * T)
    c2 = _r(_p(-1, 2) * Fr(23, 2))
    c1 = _r(_p(6, -29, 29) * Fr(21, 4), tm1 * T) + _r(tm1 * Fr(-9 * n2, 4), T)
    c0 = _r(_p(-1, 2) * _p(16, -125, 125) * Fr(9, 8), tm1 ** 2 * tpow(2)) + _r(
        _p(-9, 10) * Fr(-9 * n2, 8), tpow(2)
    )
    return DiffOp([c0, c1, c2, c3])


def Omega2(N: int, m: int) -> DiffOp:
    """Homogeneous third-order operators of the uncoupled C^(2)_m equations."""
    omt = _p(1, -1)
    if m == 0:
        return DiffOp([
            _p(-(2 * N + 1) ** 2, 2 * N * (2 * N + 1)),
            _p(N + 2 * N * N, 1 + 4 * N - 4 * N * N, -(5 * N - 2 * N * N)) * 2,
            _p(N, -(N - 1)) * omt * T * (-6),
            omt ** 2 * tpow(2) * 2,
        ])
    if m == 1:
        return DiffOp([
            -_p(4 + 8 * N + 4 * N * N, 5 + 6 * N, -(5 + 10 * N + 4 * N * N)),
            _p(2 + 4 * N + 2 * N * N, 3 + 4 * N - 2 * N * N, -(3 + 8 * N + 2 * N * N), 2 * N * N) * T * 2,
            omt * _p(1 + 3 * N, 4, 1 - 3 * N) * tpow(2) * (-2),
            omt ** 2 * _p(1, 1) * tpow(3) * 2,
        ])
    if m == 2:
        return DiffOp([
            -_p(16 + 24 * N + 8 * N * N, -(15 + 28 * N + 12 * N * N), 2 + 6 * N + 4 * N * N),
            _p(7 + 9 * N + 2 * N * N, -(7 + 12 * N + 4 * N * N), 1 + 3 * N + 2 * N * N) * T * 2,
            _p(1 + N, -N) * omt * tpow(2) * (-6),
            omt ** 2 * tpow(3) * 2,
        ])
    raise ValueError("m must be 0, 1 or 2")


def Omega2_rhs(N: int, m: int, lam_sq: Fr) -> Poly:
    """Inhomogeneous right-hand sides of the uncoupled C^(2)_m equations."""
    omt = _p(1, -1)
    if m == 0:
        return omt * tpow(N) * (Fr(N * (N + 1) * (2 * N + 1) ** 2, 2) * lam_sq)
    if m == 1:
        inner = _p(1, 1) ** 2 * (-2 * N * N * (N + 1)) + _p(0, 4 * N + 1)
        return inner * omt * tpow(N + 1) * (Fr((2 * N + 1) ** 2, N + 1) * lam_sq)
    if m == 2:
        return omt * tpow(N + 2) * (Fr(N * N * (2 * N + 1) ** 4, 8 * (N + 1) ** 2) * lam_sq)
    raise ValueError("m must be 0, 1 or 2")


def Omega3_3(N: int) -> DiffOp:
    """Fifth-order homogeneous operator of the C^(3)_3 equation."""
    tm1 = _p(-1, 1)
    n = N
    c0 = _p(
        18 * (2 * n + 3) * (n + 3) * (n - 3) * (n + 1),
        -(2 * n + 5) * (60 * n**3 - 23 * n**2 - 275 * n - 188),
        4 * (n + 2) * (36 * n**3 - 10 * n**2 - 116 * n - 69),
        -(2 * n + 3) * (36 * n**3 - 7 * n**2 - 69 * n - 32),
        2 * (n - 1) * (2 * n + 1) * (3 * n + 1) * (n + 1),
    ) * 4
    c1 = _p(
        (n + 1) * (6 * n**3 + 19 * n**2 - 114 * n - 211),
        -(24 * n**4 + 80 * n**3 - 253 * n**2 - 740 * n - 422),
        2 * (18 * n**4 + 45 * n**3 - 113 * n**2 - 270 * n - 129),
        -(24 * n**4 + 40 * n**3 - 73 * n**2 - 130 * n - 47),
        (n - 1) * (2 * n + 1) * (3 * n + 1) * (n + 1),
    ) * T * (-8)
    c2 = tm1 * _p(
        -2 * (n - 9) * (n + 2) * (n + 1),
        3 * (2 * n**3 - 8 * n**2 - 24 * n - 13),
        -3 * (2 * n**3 - 4 * n**2 - 8 * n - 3),
        2 * n * (n - 1) * (n + 1),
    ) * tpow(2) * 20
    c3 = tm1 ** 2 * _p((n + 5) * (n + 1), -(2 * n * n + 4 * n + 1), (n - 1) ** 2) * tpow(3) * 40
    c4 = tm1 ** 3 * _p(-n - 1, n - 1) * tpow(4) * (-40)
    c5 = tm1 ** 4 * tpow(5) * 8
    return DiffOp([c0, c1, c2, c3, c4, c5])


def Omega3_3_rhs(N: int, b0: Fr) -> Poly:
    return _p(-1, 0, 1) * tpow(N + 3) * (Fr(-3 * N * N * (2 * N + 1) ** 6, (N + 1) ** 3) * b0)


def first_order_factor(N: int) -> DiffOp:
    """D - (N+1)/t"""
    return DiffOp([_r(-(N + 1), T), 1])


def I1(N: int) -> DiffOp:
    return DiffOp([
        _r(-_p(-2, 1), tpow(2) * _p(-1, 1) * 2) + _r(Fr(-N, 2), tpow(2)),
        _r(1, T),
    ])


def _log_derivative(factors: list[tuple[Poly, int]]) -> RatFunc:
    """d/dt ln prod p_i^e_i"""
    out = _r(0)
    for p, e in factors:
        out = out + _r(p.derivative() * e, p)
    return out


def P_N(N) -> Poly:
    N = Fr(N)
    return _p(1, 0, 1) * ((4 * N + 3) * (3 * N + 2)) + _p(0, 2 * (20 * N * N + 15 * N + 2))


def P_N_second_form(N) -> Poly:
    N = Fr(N)
    return _p(1, 1) ** 2 * ((4 * N + 3) * (3 * N + 2)) + _p(0, 4 * (2 * (2 * N + 1) * (N - 1) + N))


def J3_0(N: int, form: int = 1) -> DiffOp:
    """First-order intertwiner for the m = 0 five-dimensional summand.

    ``form=1`` uses the log-derivative definition; ``form=2`` the displayed
    expanded constant term.
    """
    tm1 = _p(-1, 1)
    pre = tpow(N + 1)
    if form == 1:
        ld = _log_derivative([(tm1, 2 * (2 * N + 1)), (T, -2 * (N + 1))])
        inner = DiffOp([-ld, 1]).left_mul(_r(tm1 * T))
    else:
        inner = DiffOp([_r(-(2 * N + 2 * (N + 1))), _r(tm1 * T)])
    return inner.left_mul(_r(pre))


def _RB_logderiv(Nval) -> RatFunc:
    Nval = Fr(Nval)
    tm1 = _p(-1, 1)
    out = _r(1, _p(1, 1)) + _r(Nval * 4 - 3, tm1) + _r(-(2 * Nval + 6), T)
    p = P_N(Nval)
    return out + _r(p.derivative(), p)


def G3_0(N: int) -> DiffOp:
    tm1 = _p(-1, 1)
    return DiffOp([-_RB_logderiv(N), 1]).left_mul(_r(tpow(N + 1) * tm1 * T))


def J3_2(N: int) -> DiffOp:
    tm1 = _p(-1, 1)
    return DiffOp([_r(_p(2 * N, 2 * (N + 1))), _r(tm1 * T)]).left_mul(_r(tpow(N + 2)))


def G3_2(N: int) -> DiffOp:
    tm1 = _p(-1, 1)
    return DiffOp([-_RB_logderiv(-(N + 1)), 1]).left_mul(_r(tpow(N + 2) * tm1 * T))


_J4_0 = {
    2: _p(2, 1, 2),
    3: _p(64, 16, 99, 16, 64),
    4: _p(576, 96, 730, 425, 730, 96, 576),
    5: _p(16384, 2048, 19264, 6608, 28861, 6608, 19264, 2048, 16384),
}

_J4_1 = {
    2: (2, 3, _p(-4, -5, 0, 2, 10)),
    3: (64, 4, _p(-128, -112, -220, 0, 95, 32, 448)),
    4: (576, 5, _p(-1152, -864, -1288, -2471, 0, 1148, 406, 192, 5184)),
    5: (16384, 6, _p(-32768, -22528, -29952, -44112, -83454, 0, 41307, 15168, 7488, 4096, 180224)),
}


def J4_0_poly(N: int) -> Poly:
    if N not in _J4_0:
        raise KeyError(f"no zeroth-order intertwiner listed for N={N}")
    return tpow(2) * _p(1, 1) * _J4_0[N]


def J4_0(N: int) -> DiffOp:
    return DiffOp([_r(J4_0_poly(N))])


def J4_1(N: int) -> DiffOp:
    if N not in _J4_1:
        raise KeyError(f"no first-order intertwiner listed for N={N}")
    scale, power, poly = _J4_1[N]
    tm1 = _p(-1, 1)
    raw = DiffOp([_r(T * poly * (-2)), _r(tm1 * J4_0_poly(N))])
    return raw.left_mul(_r(1, tpow(power) * scale))


def J4_2(N: int) -> DiffOp:
    if N != 2:
        raise KeyError("the second-order intertwiner is listed only for N=2")
    tm1 = _p(-1, 1)
    raw = DiffOp([
        _r(_p(256, 168, -100, -233, -1176, 1040) * 3),
        _r(T * tm1 * _p(-208, -240, -99, 80, 432) * (-1)),
        _r(tm1 ** 2 * J4_0_poly(2) * 8),
    ])
    return raw.left_mul(_r(1, tpow(6) * 16))


CATALOG = {
    "O2": O2,
    "L2": L2,
    "L4": L4,
    "Q": Q,
    "R": R,
    "Omega2_0": lambda N: Omega2(N, 0),
    "Omega2_1": lambda N: Omega2(N, 1),
    "Omega2_2": lambda N: Omega2(N, 2),
    "Omega3_3": Omega3_3,
    "I1": I1,
    "J3_0": J3_0,
    "G3_0": G3_0,
    "J3_2": J3_2,
    "G3_2": G3_2,
    "J4_0": J4_0,
    "J4_1": J4_1,
    "J4_2": J4_2,
}


def build_named(name: str, N: int) -> DiffOp:
    if name not in CATALOG:
        raise KeyError(f"unknown operator {name!r}")
    if N < 0:
        raise ValueError("N must be nonnegative")
    return CATALOG[name](N)
