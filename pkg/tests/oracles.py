"""Independent reference implementations used by the tests.

Nothing here imports the library's algorithms; each oracle recomputes its
quantity from first principles (brute force, folding, determinants).
"""
import cmath
import itertools
from collections import deque
from fractions import Fraction


# ---------------------------------------------------------------- root data

def reflect_vector(i, v):
    """s_i acting on a vector in the epsilon basis of R^{r+1} (1-based i)."""
    v = list(v)
    v[i - 1], v[i] = v[i], v[i - 1]
    return tuple(v)


def root_vector(a, b, size):
    v = [0] * size
    v[a - 1], v[b - 1] = 1, -1
    return tuple(v)


def brute_root_order(word, r):
    """alpha_j = s_{i_N} ... s_{i_{j+1}} alpha_{i_j}, computed on epsilon vectors."""
    size = r + 1
    out = []
    for j, i in enumerate(word):
        v = root_vector(i, i + 1, size)
        # the rightmost reflection s_{i_{j+1}} acts first
        for k in word[j + 1:]:
            v = reflect_vector(k, v)
        a = v.index(1) + 1
        b = v.index(-1) + 1
        out.append((a, b) if a < b else None)
    return out


def brute_kostant(lam):
    """Count multisets of positive coroots (type A, simple-coroot coordinates) summing to lam."""
    r = len(lam)
    coroots = []
    for i in range(1, r + 1):
        for j in range(i + 1, r + 2):
            coroots.append(tuple(1 if i <= k + 1 < j else 0 for k in range(r)))
    count = 0
    bounds = [min(lam[k] for k in range(r) if c[k]) for c in coroots]
    for ms in itertools.product(*[range(b + 1) for b in bounds]):
        tot = [0] * r
        for mult, c in zip(ms, coroots):
            for k in range(r):
                tot[k] += mult * c[k]
        if tuple(tot) == tuple(lam):
            count += 1
    return count


# ------------------------------------------------------ folding of A2 moves

def simply_laced_moves(word, cartan):
    out = []
    w = list(word)
    for p in range(len(w) - 1):
        i, j = w[p], w[p + 1]
        if i != j and cartan(i, j) == 0:
            out.append((tuple(w[:p] + [j, i] + w[p + 2:]), p, "swap"))
    for p in range(len(w) - 2):
        i, j, k = w[p:p + 3]
        if i == k and i != j and cartan(i, j) == -1:
            out.append((tuple(w[:p] + [j, i, j] + w[p + 3:]), p, "braid"))
    return out


def _bfs_steps(src, dst, cartan):
    prev = {src: None}
    queue = deque([src])
    while queue:
        w = queue.popleft()
        if w == dst:
            break
        for w2, p, kind in simply_laced_moves(w, cartan):
            if w2 not in prev:
                prev[w2] = (w, p, kind)
                queue.append(w2)
    steps = []
    w = dst
    while prev[w] is not None:
        pw, p, kind = prev[w]
        steps.append((p, kind))
        w = pw
    return steps[::-1]


def _a2(a, b, c):
    m = min(a, c)
    return b + c - m, m, a + b - m


def folded_map(cartan, orbit_i, orbit_j, reps):
    """Rank-2 transition map obtained by folding a simply-laced diagram.

    A datum (t_1..t_reps) on the folded word (i j i j ...) is spread over the
    unfolded word (orbit_i orbit_j ...), pushed through A2/A1xA1 moves to
    (orbit_j orbit_i ...) and read back; the blocks must stay constant.
    """
    src = tuple(x for k in range(reps) for x in (orbit_i if k % 2 == 0 else orbit_j))
    dst = tuple(x for k in range(reps) for x in (orbit_j if k % 2 == 0 else orbit_i))
    steps = _bfs_steps(src, dst, cartan)

    def apply(*t):
        m = []
        for k, v in enumerate(t):
            m += [v] * len(orbit_i if k % 2 == 0 else orbit_j)
        for p, kind in steps:
            if kind == "swap":
                m[p], m[p + 1] = m[p + 1], m[p]
            else:
                m[p:p + 3] = _a2(*m[p:p + 3])
        res, pos = [], 0
        for k in range(reps):
            size = len(orbit_j if k % 2 == 0 else orbit_i)
            block = m[pos:pos + size]
            pos += size
            assert len(set(block)) == 1, "folded datum is not constant on an orbit"
            res.append(block[0])
        return tuple(res)

    return apply


def cartan_a3(i, j):
    return 2 if i == j else (-1 if abs(i - j) == 1 else 0)


def cartan_d4(i, j):
    # node 2 is the centre
    return 2 if i == j else (-1 if 2 in (i, j) else 0)


def b2_by_folding():
    return folded_map(cartan_a3, (1, 3), (2,), 4)


def g2_by_folding():
    return folded_map(cartan_d4, (1, 3, 4), (2,), 6)


# ------------------------------------------------------------ Gauss sums

def gauss_sum_direct(a, b, p, n, g):
    """sum over u in O/p^{k} units of chi^a(u) psi(t^b u) for the residue field model.

    chi(g^k) = exp(2 pi i k / n); psi(t^b u) is nontrivial only through the
    t^{-1} coefficient, so b >= 0 gives the plain character sum, b = -1 the
    classical Gauss sum and b < -1 vanishes after integrating the lower digits.
    """
    dlog = {}
    x = 1
    for k in range(p - 1):
        dlog[x] = k
        x = x * g % p
    if b < -1:
        return 0j
    total = 0j
    for u in range(1, p):
        chi = cmath.exp(2j * cmath.pi * a * dlog[u] / n)
        add = cmath.exp(2j * cmath.pi * u / p) if b == -1 else 1
        total += chi * add
    return total


# ----------------------------------------------------- Weyl-character side

def _det(M):
    if len(M) == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * _det([row[:j] + row[j + 1:] for row in M[1:]]) for j in range(len(M)))


def schur_bialternant(mu, z):
    n = len(z)
    num = _det([[z[i] ** (mu[j] + n - 1 - j) for j in range(n)] for i in range(n)])
    den = _det([[z[i] ** (n - 1 - j) for j in range(n)] for i in range(n)])
    return num / den


def deformed_character(lam, q, z):
    """prod_{i<j} (z_i - z_j / q) s_mu(z), normalized by its leading monomial z^{mu + delta}."""
    r = len(lam)
    n = r + 1
    mu = [sum(lam[k] for k in range(j, r)) for j in range(n)]
    out = 1
    for i in range(n):
        for j in range(i + 1, n):
            out *= z[i] - z[j] / q
    lead = 1
    for i in range(n):
        lead *= z[i] ** (mu[i] + n - 1 - i)
    return out * schur_bialternant(mu, z) / lead


def weyl_dimension(mu):
    """dim of the GL_{len(mu)} irreducible with highest weight mu."""
    n = len(mu)
    num = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            num *= Fraction(mu[i] - mu[j] + j - i, j - i)
    return int(num)
