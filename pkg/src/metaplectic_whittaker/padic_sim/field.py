"""Exact arithmetic in F_p(t) viewed inside the Laurent series field F_p((t)).

Polynomials are tuples of coefficients mod p, lowest degree first, without
trailing zeros.  A LaurentElem is t^v * num / den with num(0) != 0 and den
monic at t = 0 (den(0) == 1), so v is the exact valuation.
"""
from fractions import Fraction


def ptrim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def padd(a, b, p):
    n = max(len(a), len(b))
    return ptrim(((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n))


def pneg(a, p):
    return tuple((-c) % p for c in a)


def psub(a, b, p):
    return padd(a, pneg(b, p), p)


def pscale(a, c, p):
    return ptrim((c * x) % p for x in a)


def pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return ptrim(c % p for c in out)


def pshift(a, k):
    """Multiply by t^k, k >= 0."""
    return (0,) * k + tuple(a) if a else ()


def pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % p
        d = len(a) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            a[d + i] = (a[d + i] - c * y) % p
        while a and a[-1] == 0:
            a.pop()
    return ptrim(q), tuple(a)


def pgcd(a, b, p):
    while b:
        a, b = b, pdivmod(a, b, p)[1]
    if not a:
        return ()
    return pscale(a, pow(a[-1], p - 2, p), p)


def low_order(a):
    """Index of the first nonzero coefficient."""
    for i, c in enumerate(a):
        if c:
            return i
    raise ValueError("zero polynomial has no low order")


def series_inverse(a, terms, p):
    """First `terms` coefficients of 1/a as a power series; requires a(0) != 0."""
    inv0 = pow(a[0], p - 2, p)
    out = []
    for k in range(terms):
        s = 1 if k == 0 else 0
        for j in range(1, min(k, len(a) - 1) + 1):
            s -= a[j] * out[k - j]
        out.append(s * inv0 % p)
    return out


class LaurentElem:
    """Nonzero or zero element of F_p(t) with exact valuation."""

    __slots__ = ("p", "v", "num", "den")

    def __init__(self, p, v, num, den=(1,)):
        self.p = p
        num = ptrim(c % p for c in num)
        den = ptrim(c % p for c in den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.v, self.num, self.den = None, (), (1,)
            return
        a, b = low_order(num), low_order(den)
        num, den = num[a:], den[b:]
        v += a - b
        g = pgcd(num, den, p)
        if len(g) > 1:
            num = pdivmod(num, g, p)[0]
            den = pdivmod(den, g, p)[0]
        c = pow(den[0], p - 2, p)
        self.v = v
        self.num = pscale(num, c, p)
        self.den = pscale(den, c, p)

    @classmethod
    def zero(cls, p):
        return cls(p, 0, ())

    @classmethod
    def one(cls, p):
        return cls(p, 0, (1,))

    @classmethod
    def constant(cls, c, p):
        return cls(p, 0, (c % p,))

    @classmethod
    def t_power(cls, k, p, c=1):
        return cls(p, k, (c % p,))

    @classmethod
    def from_coefficients(cls, coeffs, p):
        """Laurent polynomial from a dict exponent -> coefficient."""
        coeffs = {k: c % p for k, c in coeffs.items() if c % p}
        if not coeffs:
            return cls.zero(p)
        lo, hi = min(coeffs), max(coeffs)
        return cls(p, lo, tuple(coeffs.get(k, 0) for k in range(lo, hi + 1)))

    def zero_like(self):
        return LaurentElem.zero(self.p)

    def one_like(self):
        return LaurentElem.one(self.p)

    def is_zero(self):
        return not self.num

    def valuation(self):
        """Exact valuation; zero has valuation +infinity."""
        return float("inf") if self.v is None else self.v

    def is_integral(self):
        return self.v is None or self.v >= 0

    def lead(self):
        """Residue of t^{-v} x, the leading Laurent coefficient."""
        if self.v is None:
            raise ZeroDivisionError("zero has no leading coefficient")
        return self.num[0]

    def coefficient(self, k):
        """Coefficient of t^k in the Laurent expansion."""
        if self.v is None or k < self.v:
            return 0
        idx = k - self.v
        inv = series_inverse(self.den, idx + 1, self.p)
        return sum(self.num[j] * inv[idx - j] for j in range(min(idx, len(self.num) - 1) + 1)) % self.p

    def _coerce(self, other):
        if isinstance(other, LaurentElem):
            return other
        if isinstance(other, int):
            return LaurentElem.constant(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.v is None:
            return other
        if other.v is None:
            return self
        p = self.p
        v = min(self.v, other.v)
        a = pmul(pshift(self.num, self.v - v), other.den, p)
        b = pmul(pshift(other.num, other.v - v), self.den, p)
        return LaurentElem(p, v, padd(a, b, p), pmul(self.den, other.den, p))

    __radd__ = __add__

    def __neg__(self):
        if self.v is None:
            return self
        return LaurentElem(self.p, self.v, pneg(self.num, self.p), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.v is None or other.v is None:
            return LaurentElem.zero(self.p)
        p = self.p
        return LaurentElem(p, self.v + other.v, pmul(self.num, other.num, p), pmul(self.den, other.den, p))

    __rmul__ = __mul__

    def inv(self):
        if self.v is None:
            raise ZeroDivisionError("inverse of zero")
        return LaurentElem(self.p, -self.v, self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inv()

    def t_shift(self, k):
        if self.v is None:
            return self
        return LaurentElem(self.p, self.v + k, self.num, self.den)

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        out = self.one_like()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.p == other.p and self.v == other.v and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.p, self.v, self.num, self.den))

    def __repr__(self):
        if self.v is None:
            return "0"
        return f"t^{self.v}*{list(self.num)}/{list(self.den)}"


def measure_of_ball(radius, p):
    """Additive Haar measure of t^radius O with vol(O) = 1."""
    return Fraction(1, p ** radius) if radius >= 0 else Fraction(p ** (-radius))
