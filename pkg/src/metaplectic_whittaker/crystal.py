"""Crystal-side Whittaker sums, cell volumes and Gindikin-Karpelevich identities.

Tuples in B(lam + rho) are Lusztig data on gt_word(r), indexed by positive roots
(i, j) in lexicographic order.  Each root carries a decoration: circled when
m_{i,j} = 0, boxed when the membership inequality at (i, j) is an equality,
which is exactly s_{i,j} = -1.
"""
import warnings
from dataclasses import dataclass
from itertools import permutations
from math import gcd

from .algebra import ONE, ZERO, CoefElem, XPolynomial, gauss_token, gk_factor
from .errors import InvalidArgument
from .lusztig import BzlTuple
from .roots import RootSystemA, gt_word, inversion_set, is_reduced, root_order

NORMALIZATIONS = ("haar", "printed")


@dataclass(frozen=True)
class DecoratedTuple:
    lam: tuple
    m: dict          # root -> multiplicity
    circled: dict
    boxed: dict
    r_vals: dict
    s_vals: dict

    def as_bzl(self):
        word = gt_word(len(self.lam))
        return BzlTuple(word, tuple(self.m[a] for a in root_order(word)))

    def key(self):
        return tuple(self.m[a] for a in sorted(self.m))


def _s_value(lam, m, r, i, j):
    below = sum(m.get((i + 1, k + 1), 0) for k in range(j, r + 1))
    row = sum(m[(i, k)] for k in range(j, r + 2))
    return lam[i - 1] + below - row


def _r_value(m, i, j):
    return sum(m[(k, j)] for k in range(1, i + 1))


def decorate(lam, m, r):
    roots = RootSystemA(r).positive_roots
    s_vals = {a: _s_value(lam, m, r, *a) for a in roots}
    r_vals = {a: _r_value(m, *a) for a in roots}
    circled = {a: m[a] == 0 for a in roots}
    boxed = {a: s_vals[a] == -1 for a in roots}
    return DecoratedTuple(tuple(lam), dict(m), circled, boxed, r_vals, s_vals)


def is_dominant(lam):
    return all(int(v) >= 0 for v in lam)


def enumerate_bzl(lam, rs):
    """All tuples of B(lam + rho) for the GT word, in lexicographic order of the root-indexed tuple."""
    lam = tuple(int(v) for v in lam)
    r = rs.r
    if len(lam) != r:
        raise InvalidArgument(f"weight must have {r} coordinates")
    if not is_dominant(lam):
        warnings.warn(f"{lam} is not dominant; B(lam+rho) is empty", stacklevel=2)
        return []

    def row_choices(i, below):
        # entries m_{i,j}, j = i+1..r+1; tail sums bounded by lam_i + 1 + tail of row i+1
        bounds = {}
        for j in range(i + 1, r + 2):
            bounds[j] = lam[i - 1] + 1 + sum(below.get((i + 1, k + 1), 0) for k in range(j, r + 1))
        out = []

        def rec(j, tail, acc):
            if j == i:
                out.append(dict(acc))
                return
            for v in range(bounds[j] - tail + 1):
                acc[(i, j)] = v
                rec(j - 1, tail + v, acc)
            acc.pop((i, j), None)

        rec(r + 1, 0, {})
        return out

    results = []

    def build(i, acc):
        if i == 0:
            results.append(decorate(lam, acc, r))
            return
        for row in row_choices(i, acc):
            nxt = dict(acc)
            nxt.update(row)
            build(i - 1, nxt)

    build(r, {})
    results.sort(key=DecoratedTuple.key)
    return results


def _constant(normalization):
    if normalization == "haar":
        return CoefElem.q_power(-1)
    if normalization == "printed":
        return (CoefElem.q_power(-1) - CoefElem.q_power(-2))
    raise InvalidArgument(f"unknown normalization {normalization!r}")


def weight_w(t, alpha, n, normalization="haar"):
    """Weight attached to one root of a decorated tuple."""
    if t.circled[alpha]:
        return ZERO if t.boxed[alpha] else ONE
    return _constant(normalization) * gauss_token(t.r_vals[alpha], t.s_vals[alpha], n)


def cell_weight(lam, m_by_root, n, rs, normalization="haar"):
    """prod_alpha w(m, alpha) for an arbitrary root-indexed tuple; 0 outside B(lam + rho)."""
    m = {a: int(m_by_root.get(a, 0)) for a in rs.positive_roots}
    t = decorate(tuple(lam), m, rs.r)
    if any(s < -1 for s in t.s_vals.values()):
        return ZERO
    out = ONE
    for a in rs.positive_roots:
        out = out * weight_w(t, a, n, normalization)
    return out


def whittaker_sum(lam, n, rs, normalization="haar"):
    """Sum over B(lam + rho) of prod_alpha w(m, alpha) x_alpha^{m_alpha}."""
    r = rs.r
    if not is_dominant(lam):
        return XPolynomial(r)
    out = {}
    for t in enumerate_bzl(lam, rs):
        coef = ONE
        exps = [0] * r
        for a in rs.positive_roots:
            w = weight_w(t, a, n, normalization)
            if not w:
                coef = ZERO
                break
            coef = coef * w
            for k, h in enumerate(rs.coroot(a)):
                exps[k] += h * t.m[a]
        if coef:
            e = tuple(exps)
            out[e] = out[e] + coef if e in out else coef
    return XPolynomial(r, out)


def cell_volume(t):
    """Volume of a cell: prod_j q^{<rho, beta_j^vee> m_j} (1 - [m_j > 0] / q)."""
    rs = RootSystemA(t.word.r)
    out = ONE
    for mj, beta in zip(t.m, root_order(t.word)):
        if mj:
            out = out * CoefElem.q_power(rs.rho_pairing(beta) * mj) * (ONE - CoefElem.q_power(-1))
    return out


def _tuples_bounded(roots, rs, degree, n):
    """Multiplicity vectors on the given roots with n | m and total x-degree <= degree."""
    heights = [rs.height(a) for a in roots]

    def rec(k, left):
        if k == len(roots):
            yield ()
            return
        v = 0
        while v * heights[k] <= left:
            for rest in rec(k + 1, left - v * heights[k]):
                yield (v,) + rest
            v += n
    yield from rec(0, degree)


def _sum_side(rs, support, n, degree):
    word = gt_word(rs.r)
    order = root_order(word)
    acc = {}
    for vals in _tuples_bounded(support, rs, degree, n):
        m = dict(zip(support, vals))
        t = BzlTuple(word, tuple(m.get(a, 0) for a in order))
        coef = cell_volume(t) * CoefElem.q_power(-sum(rs.rho_pairing(a) * m[a] for a in support))
        exps = [0] * rs.r
        for a in support:
            for k, h in enumerate(rs.coroot(a)):
                exps[k] += h * m[a]
        e = tuple(exps)
        acc[e] = acc[e] + coef if e in acc else coef
    return XPolynomial(rs.r, acc)


def _product_side(rs, support, n, degree):
    out = XPolynomial.one(rs.r)
    for a in support:
        out = out.mul(gk_factor(rs.coroot(a), n // gcd(n, rs.l_alpha(a)), degree), degree)
    return out


def gk_lhs(n, rs, degree):
    """Sum over Lusztig data with n | m_alpha of prod (q^{-<rho,alpha>} x_alpha)^{m_alpha} times the cell volume."""
    return _sum_side(rs, list(rs.positive_roots), n, degree)


def gk_rhs(n, rs, degree):
    return _product_side(rs, list(rs.positive_roots), n, degree)


def gkw(w, n, rs, degree):
    """Both sides of the Gindikin-Karpelevich identity restricted to Phi_w."""
    letters = tuple(w)
    if not is_reduced(letters, rs.r):
        raise InvalidArgument(f"{letters} is not a reduced word")
    support = inversion_set(letters, rs.r)
    return _sum_side(rs, support, n, degree), _product_side(rs, support, n, degree)


def all_weyl_words(r):
    """One reduced word for every element of the Weyl group of A_r."""
    out = []
    for perm in permutations(range(1, r + 2)):
        perm = list(perm)
        letters = []
        # adjacent swaps of a bubble sort spell a reduced word
        while True:
            for k in range(r):
                if perm[k] > perm[k + 1]:
                    perm[k], perm[k + 1] = perm[k + 1], perm[k]
                    letters.append(k + 1)
                    break
            else:
                break
        out.append(tuple(reversed(letters)))
    return out
