"""Exact coefficient-field kernels.

Everything here works over ``fractions.Fraction``.  The types are immutable
value objects:

* :class:`Poly`      dense univariate polynomial in ``t``
* :class:`RatFunc`   reduced quotient of two polynomials
* :class:`Series`    truncated Laurent series with explicit valuation and order
* :class:`LogSeries` polynomial in ``ln t`` with :class:`Series` coefficients
* :class:`PalinPoly` a polynomial together with its declared palindromy center
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def rational_to_str(x: Fraction) -> str:
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rational_from_str(s: str) -> Fraction:
    return Fraction(s.strip())


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class Poly:
    """Dense polynomial in t; ``coeffs[k]`` is the coefficient of t^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [as_rational(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        if k < 0:
            raise ValueError("negative monomial degree")
        return cls([0] * k + [c])

    @classmethod
    def t(cls) -> "Poly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({self.to_str()})"

    def to_str(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{rational_to_str(abs(c))}*{mono}"
            else:
                body = rational_to_str(abs(c))
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "Poly":
        return Poly([x * c for x in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by t^k (k may be negative if the low terms vanish)."""
        if k >= 0:
            return Poly([ZERO] * k + list(self.coeffs))
        if any(self.coeffs[: -k]):
            raise ValueError("shift would produce negative powers")
        return Poly(self.coeffs[-k:])

    def __divmod__(self, other: "Poly"):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.lc()
        if len(rem) - 1 < db:
            return Poly(), self
        quo = [ZERO] * (len(rem) - db)
        bc = other.coeffs
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] / lead
            quo[k] = c
            if c:
                for j, y in enumerate(bc):
                    rem[k + j] -= c * y
        return Poly(quo), Poly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(1 / self.lc())

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def content(self) -> Fraction:
        """Positive rational g with self/g a primitive integer polynomial."""
        from math import gcd, lcm

        if not self.coeffs:
            return ONE
        num = 0
        den = 1
        for c in self.coeffs:
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> "Poly":
        """Integer polynomial with coprime coefficients and positive lc."""
        if self.is_zero():
            return self
        p = self.scale(1 / self.content())
        return -p if p.lc() < 0 else p

    def reflect(self, d: int) -> "Poly":
        return palin_reflect(self, d)

    def is_palindromic(self, d: int) -> bool:
        return self.degree <= d and palin_reflect(self, d) == self


def _int_primitive(c: list[int]) -> list[int]:
    from math import gcd

    g = 0
    for x in c:
        g = gcd(g, x)
    return [x // g for x in c] if g > 1 else c


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer coefficient lists (low degree first)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        la, shift = a[-1], len(a) - 1 - db
        a = [x * lb for x in a]
        for j, y in enumerate(b):
            a[shift + j] -= la * y
        while a and a[-1] == 0:
            a.pop()
    return a


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q (gcd(0, 0) = 0), via a primitive remainder sequence."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    x = [int(c) for c in a.primitive().coeffs]
    y = [int(c) for c in b.primitive().coeffs]
    if len(x) < len(y):
        x, y = y, x
    while y:
        r = _int_prem(x, y)
        x, y = y, (_int_primitive(r) if r else r)
    return Poly([Fraction(c) for c in x]).monic()


def palin_reflect(p: Poly, d: int) -> Poly:
    """Return t^d * p(1/t)."""
    if p.degree > d:
        raise ValueError(f"center {d} is below the degree {p.degree}")
    out = [ZERO] * (d + 1)
    for k, c in enumerate(p.coeffs):
        out[d - k] = c
    return Poly(out)


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------


class RatFunc:
    """num/den in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced: bool = False):
        if not isinstance(num, Poly):
            num = Poly.const(num)
        if den is None:
            den = Poly.const(1)
        elif not isinstance(den, Poly):
            den = Poly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = Poly.const(1)
            elif den.degree > 0:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
            lead = den.lc()
            if lead != 1:
                num = num.scale(1 / lead)
                den = den.scale(1 / lead)
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Poly):
            return cls(x, _reduced=True)
        return cls(Poly.const(x), _reduced=True)

    @classmethod
    def t_power(cls, k: int, c=1) -> "RatFunc":
        if k >= 0:
            return cls(Poly.monomial(k, c), _reduced=True)
        return cls(Poly.const(c), Poly.monomial(-k))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = RatFunc.coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den.degree == 0:
            return f"RatFunc({self.num.to_str()})"
        return f"RatFunc(({self.num.to_str()})/({self.den.to_str()}))"

    def __add__(self, other):
        other = RatFunc.coerce(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other):
        return RatFunc.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RatFunc(Poly())
            return RatFunc(self.num.scale(other), self.den, _reduced=True)
        other = RatFunc.coerce(other)
        if self.is_zero() or other.is_zero():
            return RatFunc(Poly())
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n = self.num.exact_div(g1) * other.num.exact_div(g2)
        d = self.den.exact_div(g2) * other.den.exact_div(g1)
        return RatFunc(n, d, _reduced=False)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * RatFunc.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num**n, self.den**n, _reduced=True)

    def derivative(self) -> "RatFunc":
        n, d = self.num, self.den
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def valuation(self) -> int | None:
        """Order of vanishing at t = 0 (negative for a pole)."""
        if self.is_zero():
            return None
        return self.num.valuation - self.den.valuation

    def leading_at_zero(self) -> Fraction:
        """Coefficient of t^valuation in the Laurent expansion at 0."""
        vn, vd = self.num.valuation, self.den.valuation
        return self.num[vn] / self.den[vd]

    def to_series(self, order: int) -> "Series":
        """Laurent expansion at t = 0, known strictly below t^order."""
        if self.is_zero():
            return Series.zero(order)
        vd = self.den.valuation
        unit = Poly(self.den.coeffs[vd:])
        num_s = Series.from_poly(self.num, order + vd + max(0, -self.valuation()))
        inv = Series.from_poly(unit, num_s.order).inverse()
        return (num_s * inv).shift(-vd).truncate(order)


# ---------------------------------------------------------------------------
# Truncated series
# ---------------------------------------------------------------------------


class Series:
    """Truncated Laurent series sum_{k=val}^{order-1} c_k t^k.

    ``coeffs[i]`` is the coefficient of t^(val+i).  Leading zeros are stripped,
    so ``val`` is the true valuation unless the series is zero to this order,
    in which case ``val == order`` and ``coeffs`` is empty.
    """

    __slots__ = ("val", "coeffs", "order")

    def __init__(self, coeffs: Sequence = (), val: int = 0, order: int | None = None):
        c = [as_rational(x) for x in coeffs]
        if order is None:
            order = val + len(c)
        if order < val + len(c):
            c = c[: max(0, order - val)]
        elif order > val + len(c):
            c = c + [ZERO] * (order - val - len(c))
        i = 0
        while i < len(c) and c[i] == 0:
            i += 1
        self.val = val + i if i < len(c) else order
        self.coeffs = tuple(c[i:])
        self.order = order

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls((), val=order, order=order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.monomial(0, 1, order)

    @classmethod
    def monomial(cls, k: int, c, order: int) -> "Series":
        if k >= order:
            return cls.zero(order)
        return cls([c], val=k, order=order)

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> "Series":
        return cls(p.coeffs[: max(order, 0)], val=0, order=order)

    @classmethod
    def from_function(cls, f, order: int, start: int = 0) -> "Series":
        """Build from a coefficient function k -> c_k for start <= k < order."""
        return cls([f(k) for k in range(start, order)], val=start, order=order)

    def __getitem__(self, k: int) -> Fraction:
        if k >= self.order:
            raise IndexError(f"coefficient t^{k} is beyond the truncation order {self.order}")
        if k < self.val:
            return ZERO
        return self.coeffs[k - self.val]

    def coefficient_list(self, start: int, stop: int | None = None) -> list[Fraction]:
        stop = self.order if stop is None else stop
        return [self[k] for k in range(start, stop)]

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def valuation(self) -> int | None:
        return None if self.is_zero() else self.val

    def leading(self) -> Fraction:
        if self.is_zero():
            return ZERO
        return self.coeffs[0]

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.val == other.val and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.val, self.order, self.coeffs))

    def __repr__(self):
        return f"Series({self.to_str()})"

    def to_str(self, var: str = "t", limit: int | None = None) -> str:
        terms = []
        for k in range(self.val, self.order):
            c = self[k]
            if not c:
                continue
            if limit is not None and len(terms) >= limit:
                break
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            body = rational_to_str(c) if not mono else (
                mono if c == 1 else ("-" + mono if c == -1 else f"{rational_to_str(c)} {mono}")
            )
            terms.append(body)
        tail = f"O({var}^{self.order})"
        return " + ".join(terms + [tail]).replace("+ -", "- ")

    # ring operations ------------------------------------------------------

    def truncate(self, order: int) -> "Series":
        if order >= self.order:
            return self
        if order <= self.val:
            return Series.zero(order)
        return Series(self.coeffs[: order - self.val], val=self.val, order=order)

    def _scalar(self, c) -> "Series":
        c = as_rational(c)
        if c == 0:
            return Series.zero(self.order)
        return Series([x * c for x in self.coeffs], val=self.val, order=self.order)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Series.monomial(0, other, self.order)
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        lo = min(self.val, other.val)
        if lo >= order:
            return Series.zero(order)
        out = [ZERO] * (order - lo)
        for i, c in enumerate(self.coeffs):
            k = self.val + i
            if k >= order:
                break
            out[k - lo] += c
        for i, c in enumerate(other.coeffs):
            k = other.val + i
            if k >= order:
                break
            out[k - lo] += c
        return Series(out, val=lo, order=order)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], val=self.val, order=self.order)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-as_rational(other))
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scalar(other)
        if not isinstance(other, Series):
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = None
        base = self
        while True:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if not n:
                break
            base = base * base
        if result is None:
            return Series.one(self.order - self.val if not self.is_zero() else self.order)
        return result

    def shift(self, k: int) -> "Series":
        """Multiply by t^k."""
        return Series(self.coeffs, val=self.val + k, order=self.order + k)

    def derivative(self) -> "Series":
        return series_derivative(self)

    def inverse(self) -> "Series":
        if self.is_zero():
            raise ZeroDivisionError("inverse of a series that is zero to its order")
        v = self.val
        n = self.order - v
        a = self.coeffs
        inv_a0 = 1 / a[0]
        out = [inv_a0]
        for k in range(1, n):
            acc = ZERO
            for j in range(1, min(k, len(a) - 1) + 1):
                acc += a[j] * out[k - j]
            out.append(-acc * inv_a0)
        return Series(out, val=-v, order=n - v)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scalar(1 / as_rational(other))
        return self * other.inverse()

    # serialization --------------------------------------------------------

    def to_json_obj(self) -> dict:
        return series_to_json_obj(self)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Series":
        return cls(
            [rational_from_str(s) for s in obj["coeffs"]],
            val=int(obj["valuation"]),
            order=int(obj["order"]),
        )


def series_mul(a: Series, b: Series) -> Series:
    """Cauchy product; the result is known to min(a.order + b.val, b.order + a.val)."""
    if a.is_zero() or b.is_zero():
        order = min(a.order + b.val, b.order + a.val)
        return Series.zero(order)
    order = min(a.order + b.val, b.order + a.val)
    val = a.val + b.val
    n = order - val
    if n <= 0:
        return Series.zero(order)
    ac, bc = a.coeffs, b.coeffs
    out = [ZERO] * n
    la, lb = min(len(ac), n), min(len(bc), n)
    for i in range(la):
        x = ac[i]
        if not x:
            continue
        lim = min(lb, n - i)
        for j in range(lim):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return Series(out, val=val, order=order)


def series_derivative(a: Series) -> Series:
    """Term-by-term d/dt; the truncation order drops by one."""
    if a.is_zero():
        return Series.zero(a.order - 1)
    out = [(a.val + i) * c for i, c in enumerate(a.coeffs)]
    return Series(out, val=a.val - 1, order=a.order - 1)


def series_to_json_obj(s: Series) -> dict:
    return {
        "valuation": s.val,
        "order": s.order,
        "coeffs": [rational_to_str(c) for c in s.coeffs],
    }


def poly_to_json_obj(p: Poly) -> dict:
    v = p.valuation
    if v is None:
        return {"valuation": 0, "order": 0, "coeffs": []}
    return {
        "valuation": v,
        "order": p.degree + 1,
        "coeffs": [rational_to_str(c) for c in p.coeffs[v:]],
    }


def poly_from_json_obj(obj: dict) -> Poly:
    v = int(obj["valuation"])
    return Poly([0] * v + [rational_from_str(s) for s in obj["coeffs"]])


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


# ---------------------------------------------------------------------------
# Log-augmented series
# ---------------------------------------------------------------------------


class LogSeries:
    """sum_j channels[j](t) * ln(t)^j, every channel truncated to one order.

    ``analytic`` is channel 0 and ``logpart`` channel 1; higher channels arise
    from products of several logarithmic solutions.
    """

    __slots__ = ("channels", "order")

    def __init__(self, channels: Sequence[Series], order: int | None = None):
        chans = list(channels)
        if not chans:
            raise ValueError("LogSeries needs at least the analytic channel")
        if order is None:
            order = min(c.order for c in chans)
        chans = [c.truncate(order) for c in chans]
        for c in chans:
            if c.order != order:
                raise ValueError("LogSeries channels must reach the common order")
        while len(chans) > 1 and chans[-1].is_zero():
            chans.pop()
        self.channels = tuple(chans)
        self.order = order

    @classmethod
    def from_series(cls, s: Series) -> "LogSeries":
        return cls([s])

    @classmethod
    def from_pair(cls, analytic: Series, logpart: Series) -> "LogSeries":
        return cls([analytic, logpart])

    @property
    def analytic(self) -> Series:
        return self.channels[0]

    @property
    def logpart(self) -> Series:
        if len(self.channels) > 1:
            return self.channels[1]
        return Series.zero(self.order)

    def channel(self, j: int) -> Series:
        if j < len(self.channels):
            return self.channels[j]
        return Series.zero(self.order)

    @property
    def log_degree(self) -> int:
        return len(self.channels) - 1

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.channels)

    def valuation(self) -> int | None:
        vals = [c.val for c in self.channels if not c.is_zero()]
        return min(vals) if vals else None

    def __eq__(self, other):
        if not isinstance(other, LogSeries):
            return NotImplemented
        return self.order == other.order and self.channels == other.channels

    def __hash__(self):
        return hash(self.channels)

    def __repr__(self):
        parts = [self.channels[0].to_str()]
        for j, c in enumerate(self.channels[1:], start=1):
            parts.append(f"({c.to_str()})*ln(t)" + (f"^{j}" if j > 1 else ""))
        return "LogSeries(" + " + ".join(parts) + ")"

    def _coerce(self, other) -> "LogSeries":
        if isinstance(other, LogSeries):
            return other
        if isinstance(other, Series):
            return LogSeries([other])
        if isinstance(other, (int, Fraction)):
            return LogSeries([Series.monomial(0, other, self.order)])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        order = min(self.order, other.order)
        n = max(len(self.channels), len(other.channels))
        return LogSeries(
            [(self.channel(j).truncate(order) + other.channel(j).truncate(order)) for j in range(n)],
            order=order,
        )

    __radd__ = __add__

    def __neg__(self):
        return LogSeries([-c for c in self.channels], order=self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LogSeries([c * other for c in self.channels], order=self.order)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prods: dict[int, Series] = {}
        for i, a in enumerate(self.channels):
            for j, b in enumerate(other.channels):
                p = a * b
                prods[i + j] = p if (i + j) not in prods else prods[i + j] + p
        order = min(p.order for p in prods.values())
        return LogSeries([prods[k].truncate(order) for k in sorted(prods)], order=order)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a LogSeries")
        result = None
        base = self
        while True:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if not n:
                break
            base = base * base
        if result is None:
            return LogSeries([Series.one(self.order)])
        return result

    def shift(self, k: int) -> "LogSeries":
        """Multiply by t^k; for negative k this is division by a power of t."""
        return LogSeries([c.shift(k) for c in self.channels], order=self.order + k)

    def truncate(self, order: int) -> "LogSeries":
        return LogSeries([c.truncate(order) for c in self.channels], order=min(order, self.order))

    def derivative(self) -> "LogSeries":
        return logseries_derivative(self)

    def mul_series(self, s: Series) -> "LogSeries":
        return self * LogSeries([s])


def logseries_derivative(a: LogSeries) -> LogSeries:
    """(sum s_j ln^j)' = sum (s_j' + (j+1) s_{j+1}/t) ln^j."""
    chans = a.channels
    out = []
    for j, s in enumerate(chans):
        d = s.derivative()
        if j + 1 < len(chans):
            d = d + chans[j + 1].shift(-1) * (j + 1)
        out.append(d)
    return LogSeries(out)


# ---------------------------------------------------------------------------
# Palindromic polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PalinPoly:
    """A polynomial with a declared symmetry P(t) = t^center * P(1/t)."""

    poly: Poly
    center: int

    def is_palindromic(self) -> bool:
        return self.poly.is_palindromic(self.center)

    def check(self) -> None:
        if not self.is_palindromic():
            raise ValueError(f"polynomial is not palindromic about {self.center}: {self.poly}")

    def __getitem__(self, k: int) -> Fraction:
        return self.poly[k]

    @property
    def coeffs(self) -> tuple:
        return self.poly.coeffs

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def valuation(self) -> int | None:
        return self.poly.valuation


def binomial_q(x: Fraction, k: int) -> Fraction:
    """Generalised binomial coefficient C(x, k) for rational x."""
    if k < 0:
        return ZERO
    out = ONE
    for i in range(k):
        out = out * (x - i) / (i + 1)
    return out


__all__ = [
    "as_rational",
    "ZERO",
    "ONE",
    "Poly",
    "RatFunc",
    "Series",
    "LogSeries",
    "PalinPoly",
    "poly_gcd",
    "palin_reflect",
    "series_mul",
    "series_derivative",
    "logseries_derivative",
    "rational_to_str",
    "rational_from_str",
    "series_to_json_obj",
    "poly_to_json_obj",
    "poly_from_json_obj",
    "binomial_q",
    "comb",
]
