"""Coefficient ring with a formal q and symbolic Gauss sums, x-polynomials, numeric Gauss sums.

A CoefElem is a finite sum of terms c * q^k * eps^e * g_{a_1} ... g_{a_s} where
g_a stands for the irreducible Gauss sum g(a, -1) of a degree n cover
(n not dividing a) and eps = (-1, pi) is a sign with eps^2 = 1.  Products of
conjugate tokens collapse: g_a g_{n-a} = eps^a q.
"""
import cmath
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidContext


def _reduce_tokens(tokens):
    """Pair off conjugate tokens; returns (remaining tokens, extra q power, extra eps)."""
    counts = {}
    for tok in tokens:
        counts[tok] = counts.get(tok, 0) + 1
    extra_q = 0
    extra_eps = 0
    for (n, a) in sorted(counts):
        c = counts[(n, a)]
        if not c:
            continue
        b = n - a
        if b == a:
            pairs = c // 2
            counts[(n, a)] = c - 2 * pairs
        else:
            other = counts.get((n, b), 0)
            pairs = min(c, other)
            counts[(n, a)] = c - pairs
            if other:
                counts[(n, b)] = other - pairs
        extra_q += pairs
        extra_eps += pairs * a
    rest = []
    for tok in sorted(counts):
        rest.extend([tok] * counts[tok])
    return tuple(rest), extra_q, extra_eps % 2


class CoefElem:
    """Element of Q[q, q^-1, eps, Gauss tokens] with conjugate tokens reduced."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[key] = clean.get(key, 0) + c
            clean = {k: v for k, v in clean.items() if v}
        self.terms = clean

    @classmethod
    def const(cls, c):
        return cls({(0, (), 0): Fraction(c)})

    @classmethod
    def q_power(cls, k, c=1):
        return cls({(int(k), (), 0): Fraction(c)})

    @classmethod
    def token(cls, a, n):
        a %= n
        if a == 0:
            raise ValueError("trivial-character tokens are not symbolic")
        return cls({(0, ((n, a),), 0): Fraction(1)})

    @classmethod
    def eps(cls):
        return cls({(0, (), 1): Fraction(1)})

    def _coerce(self, other):
        if isinstance(other, CoefElem):
            return other
        if isinstance(other, (int, Fraction)):
            return CoefElem.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return CoefElem(out)

    __radd__ = __add__

    def __neg__(self):
        return CoefElem({k: -v for k, v in self.terms.items()})

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
        out = {}
        for (k1, t1, e1), c1 in self.terms.items():
            for (k2, t2, e2), c2 in other.terms.items():
                if t1 and t2:
                    toks, dq, de = _reduce_tokens(t1 + t2)
                else:
                    toks, dq, de = t1 or t2, 0, 0
                key = (k1 + k2 + dq, toks, (e1 + e2 + de) % 2)
                out[key] = out.get(key, 0) + c1 * c2
        return CoefElem(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = CoefElem.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def tokens_used(self):
        return sorted({tok for (_, toks, _) in self.terms for tok in toks})

    def set_eps(self, value):
        """Substitute eps -> +1 or -1."""
        out = {}
        for (k, t, e), c in self.terms.items():
            key = (k, t, 0)
            out[key] = out.get(key, 0) + (c if (e == 0 or value == 1) else -c)
        return CoefElem(out)

    def negate_tokens(self):
        """Apply g_a -> g_{-a} to every token."""
        out = {}
        for (k, t, e), c in self.terms.items():
            toks = tuple(sorted((n, (-a) % n) for n, a in t))
            out[(k, toks, e)] = out.get((k, toks, e), 0) + c
        return CoefElem(out)

    def monomial_ratio(self, other):
        """self / other when both are single terms with the same tokens, else None."""
        if not (self.is_monomial() and other.is_monomial()):
            return None
        (k1, t1, e1), c1 = next(iter(self.terms.items()))
        (k2, t2, e2), c2 = next(iter(other.terms.items()))
        if t1 != t2:
            return None
        return CoefElem({(k1 - k2, (), (e1 + e2) % 2): c1 / c2})

    def evaluate(self, q_value, token_values=None, eps_value=1):
        """Evaluate with q, the tokens (dict (n, a) -> complex) and eps given numerically."""
        total = 0
        for (k, toks, e), c in self.terms.items():
            v = complex(c) * complex(q_value) ** k
            if e:
                v *= eps_value
            for tok in toks:
                if token_values is None or tok not in token_values:
                    raise InvalidContext(f"no numeric value for Gauss token g({tok[1]},-1) of degree {tok[0]}")
                v *= token_values[tok]
            total += v
        return total

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1], kv[0][2]))

    def to_json(self):
        out = []
        for (k, toks, e), c in self.sorted_terms():
            out.append({
                "rational": str(c),
                "q_power": k,
                "tokens": [{"a": a, "b": -1, "n": n} for n, a in toks],
                "eps": e,
            })
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (k, toks, e), c in self.sorted_terms():
            bits = [str(c)]
            if k:
                bits.append(f"q^{k}")
            if e:
                bits.append("eps")
            bits.extend(f"g({a},-1)" for _, a in toks)
            parts.append("*".join(bits))
        return " + ".join(parts)


ONE = CoefElem.const(1)
ZERO = CoefElem()
Q = CoefElem.q_power(1)


def gauss_token(a, b, n):
    """g(a, b) reduced by the elementary identities; irreducible cases stay symbolic."""
    if n < 1:
        raise ValueError("cover degree must be positive")
    if b < -1:
        return CoefElem()
    if b >= 0:
        return Q - 1 if a % n == 0 else CoefElem()
    if a % n == 0:
        return CoefElem.const(-1)
    return CoefElem.token(a, n)


def _is_prime(p):
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def primitive_root(p):
    """Smallest generator of the multiplicative group of F_p."""
    if p == 2:
        return 1
    phi = p - 1
    primes = [d for d in range(2, phi + 1) if phi % d == 0 and _is_prime(d)]
    for g in range(2, p):
        if all(pow(g, phi // d, p) != 1 for d in primes):
            return g
    raise InvalidContext(f"no primitive root mod {p}")


@dataclass(frozen=True)
class GaussNumeric:
    """Numeric context: prime p, cover degree n | p-1, character chi of exact order n.

    chi(g^k) = exp(2 pi i k / n) for the smallest primitive root g.  All Gauss
    sums are computed eagerly at construction, so the context is read-only.
    """

    p: int
    n: int
    generator: int = field(init=False)
    dlog: tuple = field(init=False, repr=False)
    values: tuple = field(init=False, repr=False)

    def __post_init__(self):
        if not _is_prime(self.p):
            raise InvalidContext(f"{self.p} is not prime")
        if self.n < 1 or (self.p - 1) % self.n:
            raise InvalidContext(f"cover degree {self.n} does not divide p-1 = {self.p - 1}")
        g = primitive_root(self.p)
        dlog = [None] * self.p
        x = 1
        for k in range(self.p - 1):
            dlog[x] = k
            x = x * g % self.p
        object.__setattr__(self, "generator", g)
        object.__setattr__(self, "dlog", tuple(dlog))
        vals = []
        for a in range(self.n):
            s = 0
            for u in range(1, self.p):
                s += self.chi(u) ** a * cmath.exp(2j * cmath.pi * u / self.p)
            vals.append(s)
        object.__setattr__(self, "values", tuple(vals))

    def chi_exponent(self, u):
        """k mod n with chi(u) = exp(2 pi i k / n)."""
        u %= self.p
        if u == 0:
            raise InvalidContext("chi is only defined on units")
        return self.dlog[u] % self.n

    def chi(self, u):
        return root_of_unity(self.chi_exponent(u), self.n)

    def eps_value(self):
        """chi(-1), the numeric value of the sign token (-1, pi)."""
        return self.chi(-1)

    def token_values(self):
        return {(self.n, a): self.values[a] for a in range(1, self.n)}


def root_of_unity(k, n):
    k %= n
    if k == 0:
        return 1 + 0j
    if 2 * k == n:
        return -1 + 0j
    return cmath.exp(2j * cmath.pi * k / n)


def gauss_numeric(a, b, ctx):
    """Complex value of g(a, b) for the residue-field character sums of ctx."""
    if b < -1:
        return 0j
    if b >= 0:
        return complex(ctx.p - 1) if a % ctx.n == 0 else 0j
    return ctx.values[a % ctx.n]


class XPolynomial:
    """Polynomial in x_1..x_r with CoefElem coefficients, keyed by exponent tuples."""

    __slots__ = ("r", "terms")

    def __init__(self, r, terms=None):
        self.r = r
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(c, CoefElem):
                    c = CoefElem.const(c)
                if c:
                    e = tuple(e)
                    prev = self.terms.get(e)
                    s = c if prev is None else prev + c
                    if s:
                        self.terms[e] = s
                    else:
                        self.terms.pop(e, None)

    @classmethod
    def one(cls, r):
        return cls(r, {(0,) * r: ONE})

    @classmethod
    def monomial(cls, r, exps, coef=ONE):
        return cls(r, {tuple(exps): coef})

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out[e] + c if e in out else c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = XPolynomial(self.r)
        res.terms = out
        return res

    def __neg__(self):
        res = XPolynomial(self.r)
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def mul(self, other, degree=None):
        out = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if degree is not None and d1 + sum(e2) > degree:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                out[e] = out[e] + c if e in out else c
        res = XPolynomial(self.r)
        res.terms = {e: c for e, c in out.items() if c}
        return res

    def __mul__(self, other):
        if isinstance(other, XPolynomial):
            return self.mul(other)
        if isinstance(other, (int, Fraction)):
            other = CoefElem.const(other)
        res = XPolynomial(self.r)
        res.terms = {e: c * other for e, c in self.terms.items() if c * other}
        return res

    __rmul__ = __mul__

    def truncate(self, degree):
        res = XPolynomial(self.r)
        res.terms = {e: c for e, c in self.terms.items() if sum(e) <= degree}
        return res

    def __eq__(self, other):
        if not isinstance(other, XPolynomial):
            return NotImplemented
        return self.r == other.r and self.terms == other.terms

    def __hash__(self):
        return hash((self.r, frozenset(self.terms.items())))

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), ZERO)

    def constant_term(self):
        return self.coefficient((0,) * self.r)

    def map_coefficients(self, fn):
        res = XPolynomial(self.r)
        res.terms = {e: fn(c) for e, c in self.terms.items()}
        res.terms = {e: c for e, c in res.terms.items() if c}
        return res

    def scale_variables(self, scales):
        """Substitute x_i -> scales[i] * x_i with CoefElem scales."""
        res = XPolynomial(self.r)
        out = {}
        for e, c in self.terms.items():
            for s, k in zip(scales, e):
                c = c * s ** k
            if c:
                out[e] = c
        res.terms = out
        return res

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_json(self):
        return [{"exponents": list(e), "coefficient": c.to_json()} for e, c in self.sorted_terms()]

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*x^{e}" for e, c in self.sorted_terms())


def specialize(e, q_value, ctx=None, x_values=None, eps_value=None):
    """Ring homomorphism to C: q -> q_value, tokens -> Gauss sums of ctx, x_i -> x_values[i]."""
    token_values = None
    if ctx is not None:
        if ctx.p != q_value:
            raise InvalidContext(f"context prime {ctx.p} differs from q = {q_value}")
        token_values = ctx.token_values()
        if eps_value is None:
            eps_value = ctx.eps_value()
    if eps_value is None:
        eps_value = 1
    if isinstance(e, CoefElem):
        for n, _ in e.tokens_used():
            if ctx is None or n != ctx.n:
                raise InvalidContext(f"token of degree {n} cannot be specialized in this context")
        return e.evaluate(q_value, token_values, eps_value)
    if isinstance(e, XPolynomial):
        if x_values is None or len(x_values) != e.r:
            raise InvalidContext("x_values must supply one value per variable")
        total = 0
        for exps, c in e.terms.items():
            mono = 1
            for x, k in zip(x_values, exps):
                mono *= complex(x) ** k
            total += specialize(c, q_value, ctx, eps_value=eps_value) * mono
        return total
    if isinstance(e, (int, Fraction)):
        return complex(e)
    raise TypeError(f"cannot specialize {type(e).__name__}")


def gk_factor(heights, n_alpha, degree):
    """Truncated expansion of (1 - q^-1 x^{n_alpha}) / (1 - x^{n_alpha}) for x = x^heights.

    heights is the exponent vector of x_alpha in the simple-root variables.
    """
    r = len(heights)
    h = sum(heights)
    c = ONE - CoefElem.q_power(-1)
    terms = {(0,) * r: ONE}
    k = 1
    while h > 0 and k * n_alpha * h <= degree:
        terms[tuple(k * n_alpha * x for x in heights)] = c
        k += 1
    return XPolynomial(r, terms)

