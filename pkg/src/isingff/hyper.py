"""Hypergeometric basis series F_N, Fbar_N, G_N and the local solutions u1, u2."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .exact import LogSeries, Series
from .sequences import a_coeff, b_coeff, beta, k_coeff, lam


def hyp2f1_series(a, b, c, order: int) -> Series:
    """Taylor series of 2F1([a, b]; [c]; t) through t^(order-1)."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    coeffs = []
    term = Fraction(1)
    for n in range(order):
        coeffs.append(term)
        term = term * (a + n) * (b + n) / ((c + n) * (n + 1))
    return Series(coeffs, order=order)


@lru_cache(maxsize=None)
def F_series(N: int, order: int) -> Series:
    return Series([b_coeff(N, n) for n in range(order)], order=order)


@lru_cache(maxsize=None)
def Fbar_series(N: int, order: int) -> Series:
    return hyp2f1_series(Fraction(3, 2), N + Fraction(3, 2), N + 2, order)


@lru_cache(maxsize=None)
def G_series(N: int, order: int) -> Series:
    return hyp2f1_series(Fraction(3, 2), N + Fraction(3, 2), N + 1, order)


@lru_cache(maxsize=None)
def u1_series(N: int, order: int) -> Series:
    """t^(N+1) F_N known strictly below t^order."""
    return F_series(N, max(order - N - 1, 0)).shift(N + 1)


@lru_cache(maxsize=None)
def w2_series(N: int, order: int) -> Series:
    """Analytic channel of u2(N)."""
    if N < 1:
        raise ValueError("u2 is built for N >= 1")
    coeffs = [Fraction(0)] * order
    for n in range(min(N, order - 1)):
        coeffs[n + 1] = a_coeff(N, n)
    pref = N * lam(N) ** 2
    for n in range(max(order - N - 1, 0)):
        coeffs[N + 1 + n] += pref * b_coeff(N, n) * k_coeff(N, n)
    return Series(coeffs, order=order)


@lru_cache(maxsize=None)
def u2_logseries(N: int, order: int) -> LogSeries:
    """u2(N) = w2(N) - N lam_N^2 u1(N) ln t."""
    return LogSeries([w2_series(N, order), u1_series(N, order) * (-N * lam(N) ** 2)])


@dataclass(frozen=True)
class BasisBundle:
    N: int
    order: int
    F_N: Series
    F_N1: Series
    Fbar_N: Series
    G_N: Series
    u1_N: Series
    u1_N1: Series
    u2_N: LogSeries
    u2_N1: LogSeries

    @classmethod
    def build(cls, N: int, order: int) -> "BasisBundle":
        return cls(
            N=N,
            order=order,
            F_N=F_series(N, order),
            F_N1=F_series(N + 1, order),
            Fbar_N=Fbar_series(N, order),
            G_N=G_series(N, order),
            u1_N=u1_series(N, order),
            u1_N1=u1_series(N + 1, order),
            u2_N=u2_logseries(N, order),
            u2_N1=u2_logseries(N + 1, order),
        )


def wronskian_residual(N: int, order: int) -> LogSeries:
    """u1(N) u2(N+1) - beta_N u2(N) u1(N+1) - t^(N+2)."""
    u1n = LogSeries([u1_series(N, order)])
    u1n1 = LogSeries([u1_series(N + 1, order)])
    lhs = u1n * u2_logseries(N + 1, order) - u2_logseries(N, order) * u1n1 * beta(N)
    return lhs - LogSeries([Series.monomial(N + 2, 1, order)])


def wronskian_power(N: int, n: int, order: int) -> LogSeries:
    """sum_j (-1)^j C(n,j) beta^j [u2(N+1)/t]^(n-j) u2(N)^j F_N^(n-j) F_{N+1}^j."""
    extra = n + 1
    o = order + extra
    x = u2_logseries(N + 1, o).shift(-1) * LogSeries([F_series(N, o)])
    y = u2_logseries(N, o) * LogSeries([F_series(N + 1, o)])
    total = None
    b = beta(N)
    for j in range(n + 1):
        term = (x ** (n - j)) * (y ** j) * (Fraction((-1) ** j * comb(n, j)) * b ** j)
        total = term if total is None else total + term
    return total.truncate(order)
