"""Gelfand-Tsetlin patterns, their Gauss-sum weights and the p-part generating sum."""
import random
from dataclasses import dataclass
from itertools import product

from .algebra import ONE, ZERO, CoefElem, GaussNumeric, XPolynomial, gauss_token, specialize
from .crystal import is_dominant, whittaker_sum
from .errors import InvalidArgument, InvalidContext
from .roots import RootSystemA


@dataclass(frozen=True)
class GtPattern:
    """rows[i][j - i] holds a_{i,j} for 0 <= i <= r and i <= j <= r."""

    rows: tuple

    @property
    def r(self):
        return len(self.rows) - 1

    def a(self, i, j):
        return self.rows[i][j - i]

    def is_valid(self):
        for i in range(self.r):
            for j in range(i, self.r):
                if not (self.a(i, j) >= self.a(i + 1, j + 1) >= self.a(i, j + 1)):
                    return False
        return True


def enumerate_gt(top_row):
    """All patterns with the given top row, in lexicographic order of their rows."""
    top = tuple(int(v) for v in top_row)
    if any(top[k] < top[k + 1] for k in range(len(top) - 1)):
        raise InvalidArgument(f"top row {top} is not weakly decreasing")
    if any(v < 0 for v in top):
        raise InvalidArgument("pattern entries are natural numbers")
    out = []

    def rec(rows):
        prev = rows[-1]
        if len(prev) == 1:
            out.append(GtPattern(tuple(rows)))
            return
        ranges = [range(prev[k + 1], prev[k] + 1) for k in range(len(prev) - 1)]
        for nxt in product(*ranges):
            rec(rows + [nxt])

    rec([top])
    return out


def exponent_e(T, i, j):
    return sum(T.a(i, k) - T.a(i - 1, k) for k in range(j, T.r + 1))


def gamma(T, i, j, n, normalization="classical"):
    left, mid, right = T.a(i - 1, j - 1), T.a(i, j), T.a(i - 1, j)
    e = exponent_e(T, i, j)
    if normalization == "classical":
        shift = CoefElem.q_power(e - 1)
    elif normalization == "printed":
        shift = ONE
    else:
        raise InvalidArgument(f"unknown normalization {normalization!r}")
    if left > mid == right:
        return CoefElem.q_power(e)
    if left > mid > right:
        return shift * gauss_token(e, 0, n)
    if left == mid > right:
        return shift * gauss_token(e, -1, n)
    return ZERO


def gt_weight(T, n, normalization="classical"):
    """Product of gamma(a_{i,j}) over 1 <= i <= j <= r."""
    out = ONE
    for i in range(1, T.r + 1):
        for j in range(i, T.r + 1):
            g = gamma(T, i, j, n, normalization)
            if not g:
                return ZERO
            out = out * g
    return out


def top_row(lam):
    """Partition form of lam + rho: a_{0,j} = sum_{k >= j} (lam_k + 1), last entry 0."""
    r = len(lam)
    return tuple(sum(lam[k] + 1 for k in range(j, r)) for j in range(r + 1))


def k_vector(T):
    return tuple(sum(T.a(i, j) - T.a(0, j) for j in range(i, T.r + 1)) for i in range(1, T.r + 1))


def gt_ppart(lam, n, rs, normalization="classical"):
    """Sum over patterns with top row lam + rho of G(T) x^{k(T)}."""
    lam = tuple(int(v) for v in lam)
    if len(lam) != rs.r:
        raise InvalidArgument(f"weight must have {rs.r} coordinates")
    if not is_dominant(lam):
        raise InvalidArgument(f"{lam} is not dominant")
    out = {}
    for T in enumerate_gt(top_row(lam)):
        w = gt_weight(T, n, normalization)
        if w:
            k = k_vector(T)
            out[k] = out[k] + w if k in out else w
    return XPolynomial(rs.r, out)


def rank_one_calibration(crystal_normalization="haar", gt_normalization="classical"):
    """Scale c with crystal(x -> c x) = GT at rank one, or None when no monomial scale exists."""
    rs = RootSystemA(1)
    cr = whittaker_sum((0,), 1, rs, crystal_normalization)
    g = gt_ppart((0,), 1, rs, gt_normalization)
    if cr.constant_term() != g.constant_term():
        return None
    return g.coefficient((1,)).monomial_ratio(cr.coefficient((1,)))


@dataclass
class ComparisonReport:
    lam: tuple
    n: int
    r: int
    crystal: XPolynomial
    gt: XPolynomial
    calibration: dict
    table: list
    symbolic_match: bool
    numeric: dict

    @property
    def verdict(self):
        ok = self.symbolic_match
        if self.numeric is not None:
            ok = ok and self.numeric["match"]
        return "match" if ok else "mismatch"

    def to_json(self):
        return {
            "lambda": list(self.lam),
            "n": self.n,
            "r": self.r,
            "calibration": self.calibration,
            "crystal": self.crystal.to_json(),
            "gt": self.gt.to_json(),
            "table": self.table,
            "symbolic_match": self.symbolic_match,
            "numeric": self.numeric,
            "verdict": self.verdict,
        }


def compare_crystal_gt(lam, n, rs, p=None, seed=0, points=3, tol=1e-9,
                       crystal_normalization="haar", gt_normalization="classical"):
    """Compare the crystal sum with the GT p-part after the rank-one calibration.

    Both sides are compared with eps = (-1, pi) set to 1.  With p given and
    n | p - 1, both are also evaluated at random x-points; the numeric
    tolerance is relative to max(1, |value|) since coefficients grow like q^k.
    """
    lam = tuple(int(v) for v in lam)
    cr = whittaker_sum(lam, n, rs, crystal_normalization)
    g = gt_ppart(lam, n, rs, gt_normalization)
    scale = rank_one_calibration(crystal_normalization, gt_normalization)
    calibration = {
        "crystal_normalization": crystal_normalization,
        "gt_normalization": gt_normalization,
        "x_scale": None if scale is None else scale.to_json(),
        "eps": 1,
    }
    if scale is None:
        return ComparisonReport(lam, n, rs.r, cr, g, calibration, [], False, None)
    cal = cr.scale_variables([scale] * rs.r).map_coefficients(lambda c: c.set_eps(1))
    g1 = g.map_coefficients(lambda c: c.set_eps(1))
    table = []
    ok = True
    for e in sorted(set(cal.terms) | set(g1.terms)):
        a, b = cal.coefficient(e), g1.coefficient(e)
        same = a == b
        ok = ok and same
        table.append({"exponents": list(e), "crystal": a.to_json(), "gt": b.to_json(), "match": same})
    numeric = None
    if p is not None:
        try:
            ctx = GaussNumeric(p, n)
        except InvalidContext:
            ctx = None
        if ctx is not None:
            rng = random.Random(seed)
            worst = 0.0
            for _ in range(points):
                xs = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(rs.r)]
                va = specialize(cal, p, ctx, xs, eps_value=1)
                vb = specialize(g1, p, ctx, xs, eps_value=1)
                worst = max(worst, abs(va - vb) / max(1.0, abs(va), abs(vb)))
            numeric = {"p": p, "points": points, "seed": seed, "max_rel_diff": worst, "match": worst <= tol}
    return ComparisonReport(lam, n, rs.r, cal, g1, calibration, table, ok, numeric)
