"""Scalar sequences and constants built from Pochhammer symbols."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

HALF = Fraction(1, 2)


def pochhammer(x, n: int) -> Fraction:
    """Rising factorial x (x+1) ... (x+n-1)."""
    if n < 0:
        raise ValueError("Pochhammer symbol needs n >= 0")
    x = Fraction(x)
    out = Fraction(1)
    for k in range(n):
        out *= x + k
    return out


@lru_cache(maxsize=None)
def lam(N: int) -> Fraction:
    """(1/2)_N / N!"""
    if N < 0:
        raise ValueError("lambda_N needs N >= 0")
    return pochhammer(HALF, N) / factorial(N)


@lru_cache(maxsize=None)
def beta(N: int) -> Fraction:
    """(2N+1)^2 / (4N(N+1))"""
    if N <= 0:
        raise ValueError("beta_N is defined for N >= 1")
    return Fraction((2 * N + 1) ** 2, 4 * N * (N + 1))


def structure_constants(N: int) -> tuple[Fraction, Fraction]:
    return lam(N), beta(N)


@lru_cache(maxsize=None)
def a_coeff(N: int, n: int) -> Fraction:
    """Coefficients of the truncated analytic head of the second solution."""
    if n == 0:
        return Fraction(1)
    if n < 0 or n >= N:
        raise ValueError(f"a_n(N) is only defined for 0 <= n <= N-1 (got N={N}, n={n})")
    return a_coeff(N, n - 1) * (n - HALF) * (n - HALF - N) / ((n - N) * n)


def a_coeff_second_form(N: int, n: int) -> Fraction:
    """The alternative closed form lam_N (1/2)_n (N-n)! / ((1/2)_{N-n} n!)."""
    if n < 0 or n > N:
        raise ValueError("second form needs 0 <= n <= N")
    return lam(N) * pochhammer(HALF, n) * factorial(N - n) / (pochhammer(HALF, N - n) * factorial(n))


@lru_cache(maxsize=None)
def b_coeff(N: int, n: int) -> Fraction:
    """Taylor coefficients of 2F1([1/2, N+1/2]; [N+1]; t)."""
    if n < 0:
        return Fraction(0)
    if n == 0:
        return Fraction(1)
    return b_coeff(N, n - 1) * (n - HALF) * (n - HALF + N) / ((N + n) * n)


@lru_cache(maxsize=None)
def harmonic_partial(z, n: int) -> Fraction:
    """sum_{k=0}^{n-1} 1/(z+k)"""
    z = Fraction(z)
    if n <= 0:
        return Fraction(0)
    return harmonic_partial(z, n - 1) + 1 / (z + n - 1)


@lru_cache(maxsize=None)
def k_coeff(N: int, n: int) -> Fraction:
    return (
        harmonic_partial(1, n)
        + harmonic_partial(1, n + N)
        - harmonic_partial(HALF, n)
        - harmonic_partial(HALF, n + N)
    )


def _gamma_half(twice: int) -> tuple[Fraction, int]:
    """Gamma(twice/2) as (rational, power of sqrt(pi))."""
    if twice <= 0:
        raise ValueError("Gamma argument must be positive")
    if twice % 2 == 0:
        return Fraction(factorial(twice // 2 - 1)), 0
    k = (twice - 1) // 2
    return pochhammer(HALF, k), 1


@dataclass(frozen=True)
class LeadingTerm:
    """c * t^exponent; the exponent is a Fraction so odd-n half powers are exact."""

    exponent: Fraction
    coefficient: Fraction


def selberg_leading(nfold: int, N: int) -> LeadingTerm:
    """Leading small-t term of the nfold integral from the Selberg product."""
    if nfold < 2:
        raise ValueError("nfold must be at least 2")
    coeff = Fraction(1)
    sqrt_pi = 0

    def gamma_mul(twice, sign=1):
        nonlocal coeff, sqrt_pi
        g, p = _gamma_half(twice)
        if sign > 0:
            coeff *= g
            sqrt_pi += p
        else:
            coeff /= g
            sqrt_pi -= p

    if nfold % 2 == 0:
        n = nfold // 2
        exponent = Fraction(n * (N + n))
        coeff /= factorial(n) ** 2
        sqrt_pi -= 4 * n
        gamma_mul(2 * N + 2 * n + 1)
        gamma_mul(2 * n + 1)
        gamma_mul(2 * N + 1, -1)
        gamma_mul(1, -1)
        for j in range(n):
            for _ in range(2):
                gamma_mul(2 * N + 2 * j + 1)
                gamma_mul(2 * j + 1)
                gamma_mul(2 * j + 4)
                gamma_mul(2 * (N + n + j + 1), -1)
    else:
        n = (nfold - 1) // 2
        exponent = Fraction(N) * (n + HALF) + n * (n + 1)
        coeff /= factorial(n)
        sqrt_pi -= 2 * (2 * n + 1)
        gamma_mul(2 * N + 1)
        gamma_mul(1)
        gamma_mul(2 * (N + n + 1), -1)
        for j in range(n):
            for _ in range(2):
                gamma_mul(2 * N + 2 * j + 3)
                gamma_mul(2 * j + 3)
                gamma_mul(2 * j + 4)
                gamma_mul(2 * (N + n + j + 2), -1)
    if sqrt_pi != 0:
        raise ArithmeticError(f"pi factors do not cancel (sqrt(pi)^{sqrt_pi})")
    return LeadingTerm(exponent, coeff)


def f2_leading(N: int) -> Fraction:
    return lam(N + 1) ** 2 / (2 * N + 1)


def f3_leading(N: int) -> Fraction:
    return lam(N + 1) ** 3 / (2 * (2 * N + 1) * (N + 2) ** 2)
