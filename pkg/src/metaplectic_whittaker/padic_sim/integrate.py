"""Exact integration over cells by branch and bound on p-adic balls.

The box (t^{-B} O)^N in word coordinates is refined until the Iwasawa cell
label, the root-of-unity part of f and psi_lambda are all constant on a
product of balls; that box then contributes its exact measure.  Results are
kept as Fractions per (zeta exponent, psi exponent) and turned into complex
numbers only at the end.
"""
import cmath
from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra import GaussNumeric, specialize
from ..crystal import cell_weight
from ..errors import InvalidArgument, InvalidContext, ResourceLimit, UnsupportedConfiguration
from ..roots import RootSystemA, gt_word, root_order
from .ball import Ball, Undetermined
from .iwasawa import f_exponents, iwasawa, residue_exponent, unipotent_from_coordinates


@dataclass
class CellMeasures:
    """Exact pushforward of the measure to (cell label, zeta exponent, psi exponent)."""

    word: object
    p: int
    n: int
    lams: tuple
    box: int
    with_zeta: bool
    max_sum: int
    data: dict = field(default_factory=dict)
    boxes: int = 0

    def add(self, m, z, s, measure):
        cell = self.data.setdefault(m, {})
        cell[(z, s)] = cell.get((z, s), 0) + measure

    def merge(self, other):
        """Add the measures of a disjoint piece of the same box."""
        for m, cell in other.data.items():
            for key, mu in cell.items():
                self.add(m, *key, mu)
        self.boxes += other.boxes
        return self

    def volume(self, m):
        return sum(self.data.get(tuple(m), {}).values(), Fraction(0))

    def exact_sums(self, m, lam=None, n=None):
        """Measures grouped by (zeta exponent mod n, psi_lambda exponent); psi is dropped when lam is None."""
        n = self.n if n is None else n
        if self.n % n:
            raise InvalidArgument(f"measures were taken for n = {self.n}, not a multiple of {n}")
        idx = None if lam is None else self.lams.index(tuple(lam))
        out = {}
        for (z, s), mu in self.data.get(tuple(m), {}).items():
            key = (z % n, 0 if idx is None else s[idx])
            out[key] = out.get(key, 0) + mu
        return out

    def character_sum(self, m, lam=None, n=None):
        """Integral over the cell of zeta (and psi_lambda if lam is given), as a complex number."""
        n = self.n if n is None else n
        total = 0j
        for (z, s), mu in sorted(self.exact_sums(m, lam, n).items()):
            total += float(mu) * cmath.exp(2j * cmath.pi * (z / n + s / self.p))
        return total


def _evaluate(coords, word, lams, n, p, max_sum, with_zeta):
    res = iwasawa(coords, word, max_sum=max_sum)
    if res is None:
        return None
    m = tuple(res.m)
    z = 0
    if with_zeta:
        for k, e in enumerate(f_exponents(res)):
            if res.w[k] is not None and e % n:
                z -= e * residue_exponent(res.w[k].lead(), n, p)
        z %= n
    s = ()
    if lams:
        u = unipotent_from_coordinates(coords, word)
        s = tuple(sum(u[i + 1][i].coefficient(-1 - lam[i]) for i in range(word.r)) % p
                  for lam in lams)
    return m, z, s


def cell_measures(word, p, n=1, lams=(), box=2, max_sum=None, with_zeta=True, budget=5_000_000,
                  start=None):
    """Branch and bound over (t^{-box} O)^N; returns CellMeasures for all cells with sum(m) <= max_sum.

    Every weight in lams gets its own psi exponent, so one pass serves several
    weights.  Cells with sum(m) <= box lie inside the box, hence max_sum
    defaults to box.  start optionally replaces the initial box by a list of
    disjoint sub-boxes (lists of Balls), which is how work is split across
    processes.
    """
    if word.r > 2:
        raise UnsupportedConfiguration("exact cell integration is implemented for r <= 2")
    if (p - 1) % n:
        raise InvalidContext(f"{n} does not divide p - 1 = {p - 1}")
    lams = tuple(tuple(int(v) for v in lam) for lam in lams)
    if any(len(lam) != word.r for lam in lams):
        raise InvalidArgument(f"weights must have {word.r} coordinates")
    if max_sum is None:
        max_sum = box
    N = len(word)
    out = CellMeasures(word, p, n, lams, box, with_zeta, max_sum)
    if start is None:
        start = [[Ball(p, {}, -box) for _ in range(N)]]
    stack = [list(c) for c in reversed(start)]
    while stack:
        coords = stack.pop()
        try:
            hit = _evaluate(coords, word, lams, n, p, max_sum, with_zeta)
        except Undetermined:
            out.boxes += 1
            if out.boxes > budget:
                raise ResourceLimit(f"more than {budget} boxes needed", depth=max(-c.radius for c in coords))
            k = min(range(N), key=lambda i: coords[i].radius)
            for child in reversed(coords[k].split()):
                nxt = list(coords)
                nxt[k] = child
                stack.append(nxt)
            continue
        out.boxes += 1
        if hit is None:
            continue
        measure = Fraction(1)
        for c in coords:
            measure *= Fraction(p) ** (-c.radius)
        out.add(*hit, measure)
    return out


def split_box(word, p, box):
    """The p sub-boxes of (t^{-box} O)^N obtained by fixing the top digit of the first coordinate."""
    N = len(word)
    first = Ball(p, {}, -box).split()
    return [[b] + [Ball(p, {}, -box) for _ in range(N - 1)] for b in first]


def closed_form(m_by_root, lam, n, p, x_values, rs, negate_tokens=False):
    """Specialized prod_alpha w(m, alpha) x_alpha^{m_alpha} at q = p."""
    w = cell_weight(lam, m_by_root, n, rs)
    if negate_tokens:
        w = w.negate_tokens()
    ctx = GaussNumeric(p, n)
    val = specialize(w, p, ctx)
    for a, k in m_by_root.items():
        for x, h in zip(x_values, rs.coroot(a)):
            val *= complex(x) ** (h * k)
    return val


def integrate_cell(m, lam, n, p, x_values, word=None, with_psi=True, measures=None):
    """Integral of f * psi_lambda (or of f alone) over the cell C_m, as a complex number."""
    lam = tuple(int(v) for v in lam)
    r = len(lam)
    if word is None:
        word = gt_word(r)
    m = tuple(int(v) for v in m)
    if len(m) != len(word):
        raise InvalidArgument("m must have one entry per positive root")
    if measures is None:
        measures = cell_measures(word, p, n, [lam] if with_psi else [], box=sum(m), max_sum=sum(m))
    rs = RootSystemA(r)
    roots = root_order(word)
    q_power = -sum(rs.height(a) * k for a, k in zip(roots, m))
    val = measures.character_sum(m, lam if with_psi else None, n) * float(p) ** q_power
    for a, k in zip(roots, m):
        for x, h in zip(x_values, rs.coroot(a)):
            val *= complex(x) ** (h * k)
    return val
