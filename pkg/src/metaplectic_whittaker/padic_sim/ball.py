"""Balls c + t^k O in F_p((t)) with interval-style arithmetic.

The centre c is a Laurent polynomial with all exponents below k.  Every
operation returns a ball containing all results for inputs in the operand
balls.  Questions whose answer is not constant on a ball raise Undetermined.
"""


EXACT = 10 ** 9
SERIES_TERMS = 64


class Undetermined(Exception):
    """Raised when a quantity is not constant on the current ball."""


def _trunc(center, k):
    return {e: c for e, c in center.items() if e < k and c}


class Ball:
    __slots__ = ("p", "center", "radius")

    def __init__(self, p, center, radius):
        self.p = p
        self.radius = radius
        self.center = _trunc(center, radius)

    @classmethod
    def exact_int(cls, c, p, radius):
        return cls(p, {0: c % p} if c % p else {}, radius)

    def zero_like(self):
        return Ball(self.p, {}, EXACT)

    def one_like(self):
        return Ball(self.p, {0: 1}, EXACT)

    def _cval(self):
        return min(self.center) if self.center else None

    def valuation(self):
        v = self._cval()
        if v is None:
            raise Undetermined("valuation")
        return v

    def is_integral(self):
        v = self._cval()
        if v is not None:
            return v >= 0
        if self.radius >= 0:
            return True
        raise Undetermined("integrality")

    def lead(self):
        v = self.valuation()
        return self.center[v]

    def coefficient(self, k):
        if k >= self.radius:
            raise Undetermined("digit")
        return self.center.get(k, 0)

    def __add__(self, other):
        if isinstance(other, int):
            other = Ball.exact_int(other, self.p, EXACT)
        k = min(self.radius, other.radius)
        out = dict(self.center)
        for e, c in other.center.items():
            if e < k:
                out[e] = (out.get(e, 0) + c) % self.p
        return Ball(self.p, out, k)

    __radd__ = __add__

    def __neg__(self):
        return Ball(self.p, {e: (-c) % self.p for e, c in self.center.items()}, self.radius)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Ball.exact_int(other, self.p, EXACT)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = Ball.exact_int(other, self.p, EXACT)
        big = EXACT
        v1 = self._cval()
        v2 = other._cval()
        k = min(self.radius + (big if v2 is None else v2),
                other.radius + (big if v1 is None else v1),
                self.radius + other.radius)
        k = min(k, big)
        p = self.p
        out = {}
        for e1, c1 in self.center.items():
            for e2, c2 in other.center.items():
                e = e1 + e2
                if e < k:
                    out[e] = (out.get(e, 0) + c1 * c2) % p
        return Ball(p, out, k)

    __rmul__ = __mul__

    def inv(self):
        v = self._cval()
        if v is None:
            raise Undetermined("inverse")
        p = self.p
        if self.radius >= EXACT and len(self.center) == 1:
            return Ball(p, {-v: pow(self.center[v], p - 2, p)}, EXACT)
        # a truncated series is still a valid (larger) ball
        k = min(self.radius - 2 * v, SERIES_TERMS - v)
        # unit part u = t^{-v} c, expanded as a power series
        hi = max(self.center)
        unit = [self.center.get(v + j, 0) for j in range(hi - v + 1)]
        terms = max(k + v, 0)
        inv0 = pow(unit[0], p - 2, p)
        series = []
        for j in range(terms):
            s = 1 if j == 0 else 0
            for i in range(1, min(j, len(unit) - 1) + 1):
                s -= unit[i] * series[j - i]
            series.append(s * inv0 % p)
        return Ball(p, {j - v: c for j, c in enumerate(series) if c}, k)

    def t_shift(self, k):
        return Ball(self.p, {e + k: c for e, c in self.center.items()}, self.radius + k)

    def split(self):
        """The p sub-balls of radius one higher."""
        k = self.radius
        out = []
        for a in range(self.p):
            c = dict(self.center)
            if a:
                c[k] = a
            out.append(Ball(self.p, c, k + 1))
        return out

    def __repr__(self):
        terms = " + ".join(f"{c}t^{e}" for e, c in sorted(self.center.items())) or "0"
        return f"({terms} + O(t^{self.radius}))"
