"""Independent series expansion of the n-fold form factor integrals.

Every factor is expanded around t = 0 and each x-integral is an exact Beta
value at half-integer arguments, with one power of pi divided out per
integration variable.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial

from .exact import Series
from .sequences import pochhammer

HALF = Fraction(1, 2)


def _gamma_split(a: Fraction) -> tuple[Fraction, int]:
    """Gamma(a) = r * sqrt(pi)^k for a positive integer or half-integer a."""
    a = Fraction(a)
    if a <= 0:
        raise ValueError("Gamma argument must be positive")
    if a.denominator == 1:
        return Fraction(factorial(a.numerator - 1)), 0
    if a.denominator == 2:
        k = int(a - HALF)
        return pochhammer(HALF, k), 1
    raise ValueError("argument must be an integer or half-integer")


def beta_half(a, b) -> Fraction:
    """B(a, b) / pi for half-integer/integer arguments with exactly one pi."""
    ra, ka = _gamma_split(Fraction(a))
    rb, kb = _gamma_split(Fraction(b))
    rc, kc = _gamma_split(Fraction(a) + Fraction(b))
    if ka + kb - kc != 2:
        raise ValueError("argument pattern does not produce a single factor of pi")
    return ra * rb / rc


@dataclass(frozen=True)
class MomentKey:
    """Integral of x^(p + half_offset) (1-x)^eps_onemx (1-tx)^eps_onemtx over [0, 1]."""

    p: int
    half_offset: Fraction
    eps_onemx: Fraction
    eps_onemtx: Fraction


@lru_cache(maxsize=None)
def moment_series(key: MomentKey, order: int) -> Series:
    coeffs = []
    e = Fraction(key.eps_onemtx)
    for k in range(order):
        binom = pochhammer(-e, k) / factorial(k)  # coefficient of (tx)^k
        coeffs.append(binom * beta_half(key.p + key.half_offset + 1 + k, key.eps_onemx + 1))
    return Series(coeffs, order=order)


# ---------------------------------------------------------------------------
# integrand expansion
# ---------------------------------------------------------------------------


def _vandermonde_sq(k: int) -> dict[tuple[int, ...], int]:
    poly: dict[tuple[int, ...], int] = {(0,) * k: 1}
    for i, j in combinations(range(k), 2):
        ei = tuple(1 if v == i else 0 for v in range(k))
        ej = tuple(1 if v == j else 0 for v in range(k))
        factor = {tuple(2 * x for x in ei): 1, tuple(x + y for x, y in zip(ei, ej)): -2, tuple(2 * x for x in ej): 1}
        out: dict[tuple[int, ...], int] = defaultdict(int)
        for e1, c1 in poly.items():
            for e2, c2 in factor.items():
                out[tuple(x + y for x, y in zip(e1, e2))] += c1 * c2
        poly = {e: c for e, c in out.items() if c}
    return poly


def _cross_terms(p: int, q: int, inner: int):
    """Expand prod_{i,j} (1 - t x_i y_j)^(-2) below t^inner."""
    pairs = [(i, j) for i in range(p) for j in range(q)]
    out: dict[tuple, dict[int, int]] = defaultdict(lambda: defaultdict(int))

    def rec(idx, left, xs, ys, weight, deg):
        if idx == len(pairs):
            out[(tuple(xs), tuple(ys))][deg] += weight
            return
        i, j = pairs[idx]
        for m in range(left + 1):
            xs[i] += m
            ys[j] += m
            rec(idx + 1, left - m, xs, ys, weight * (m + 1), deg + m)
            xs[i] -= m
            ys[j] -= m

    rec(0, max(inner - 1, 0), [0] * p, [0] * q, 1, 0)
    return out


@dataclass(frozen=True)
class VariableGroup:
    count: int
    half_offset: Fraction
    eps_onemx: Fraction
    eps_onemtx: Fraction


def _integral_series(N: int, A: VariableGroup, B: VariableGroup, inner: int) -> Series:
    if inner <= 0:
        return Series.zero(0)
    cross = _cross_terms(A.count, B.count, inner)
    vA, vB = _vandermonde_sq(A.count), _vandermonde_sq(B.count)
    grouped: dict[tuple, dict[int, Fraction]] = defaultdict(lambda: defaultdict(Fraction))
    for (xs, ys), degs in cross.items():
        for ea, ca in vA.items():
            ka = tuple(sorted(x + e for x, e in zip(xs, ea)))
            for eb, cb in vB.items():
                kb = tuple(sorted(y + e for y, e in zip(ys, eb)))
                for d, w in degs.items():
                    grouped[(ka, kb)][d] += w * ca * cb
    total = Series.zero(inner)
    for (ka, kb), degs in grouped.items():
        poly = [Fraction(0)] * inner
        for d, c in degs.items():
            poly[d] += c
        if not any(poly):
            continue
        s = Series(poly, order=inner)
        for e in ka:
            s = s * moment_series(MomentKey(N + e, A.half_offset, A.eps_onemx, A.eps_onemtx), inner)
        for e in kb:
            s = s * moment_series(MomentKey(N + e, B.half_offset, B.eps_onemx, B.eps_onemtx), inner)
        total = total + s
    return total


def oracle_f(n: int, N: int, order: int) -> Series:
    """f^(n)_{N,N} (even n) or f^(n)_{N,N} / t^(N/2) (odd n) below t^order."""
    if n < 1:
        raise ValueError("n must be positive")
    if n % 2 == 0:
        k = n // 2
        lead = k * (N + k)
        A = VariableGroup(k, HALF, -HALF, -HALF)
        B = VariableGroup(k, -HALF, HALF, HALF)
        norm = Fraction(1, factorial(k) ** 2)
    else:
        k = (n - 1) // 2
        lead = k * N + k * (k + 1)
        A = VariableGroup(k + 1, -HALF, -HALF, -HALF)
        B = VariableGroup(k, HALF, HALF, HALF)
        norm = Fraction(1, factorial(k) * factorial(k + 1))
    inner = order - lead
    if inner <= 0:
        return Series.zero(order)
    body = _integral_series(N, A, B, inner) * norm
    return body.shift(lead).truncate(order)


def oracle_f4(N: int, order: int = 8) -> Series:
    return oracle_f(4, N, order)
