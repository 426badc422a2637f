"""Explicit Iwasawa decomposition of lower unitriangular matrices and the quantities read off it.

Matrices are lists of rows with 0-based indices; a root (a, b) with a < b
acts through the entry (b, a) of e_{-alpha}(x) (1-based).  The algorithm is
generic in the scalar type: it only needs +, -, *, inv(), is_integral(),
valuation(), lead() and zero_like()/one_like(), which both LaurentElem and
Ball provide.
"""
import cmath
from dataclasses import dataclass

from ..errors import InvalidContext, UnsupportedConfiguration
from ..roots import RootSystemA, pairing, root_order
from .field import LaurentElem


def identity(size, one):
    zero = one.zero_like()
    return [[one if i == j else zero for j in range(size)] for i in range(size)]


def unipotent_from_coordinates(coords, word):
    """u = prod_j e_{-alpha_j}(x_j) in the word's root order, left to right."""
    roots = root_order(word)
    if len(coords) != len(roots):
        raise ValueError("one coordinate per positive root is required")
    size = word.r + 1
    u = identity(size, coords[0].one_like())
    for x, (a, b) in zip(coords, roots):
        # right multiplication by e_{-alpha}(x): column a += x * column b
        for i in range(size):
            u[i][a - 1] = u[i][a - 1] + u[i][b - 1] * x
    return u


def mat_mul(A, B):
    n, m, k = len(A), len(B[0]), len(B)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = A[i][0] * B[0][j]
            for t in range(1, k):
                s = s + A[i][t] * B[t][j]
            row.append(s)
        out.append(row)
    return out


def det(M):
    """Laplace expansion; fine for the small minors used here."""
    n = len(M)
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def submatrix(M, rows, cols):
    return [[M[i][j] for j in cols] for i in rows]


@dataclass
class IwasawaResult:
    word: object
    y: list
    w: list          # None stands for w_k = 1
    m: list
    p1: list

    def w_value(self, k):
        return self.w[k] if self.w[k] is not None else self.y[k].one_like()


def iwasawa(coords, word, check=False, max_sum=None, best_effort=False):
    """Iwasawa decomposition: push e_{-alpha_k}(x_k) through p_{k+1} for k = N..1.

    Returns y_k, w_k, m_k = -v(w_k) and p_1 with u = p_1 kappa, kappa integral.
    With check=True also verifies that each intermediate p'_k has the expected
    shape (exact scalars only).  With max_sum set, returns None as soon as the
    m_k found so far add up to more than max_sum.  Ranks above 3 are refused
    unless best_effort is set.
    """
    if not best_effort:
        check_rank(word)
    roots = root_order(word)
    N = len(roots)
    size = word.r + 1
    one = coords[0].one_like()
    P = identity(size, one)
    ys, ws, ms = [None] * N, [None] * N, [0] * N
    for k in range(N - 1, -1, -1):
        a, b = roots[k]
        a0, b0 = a - 1, b - 1
        M = [row[:] for row in P]
        # left multiplication by e_{-alpha}(x): row b += x * row a
        M[b0] = [M[b0][j] + coords[k] * M[a0][j] for j in range(size)]
        rows = list(range(a0)) + [b0]
        num = det(submatrix(M, rows, list(range(a))))
        den = det(submatrix(M, rows, list(range(a0)) + [b0]))
        y = num * den.inv()
        # p' = M e_{-alpha}(-y): column a -= y * column b
        for i in range(size):
            M[i][a0] = M[i][a0] - y * M[i][b0]
        if check:
            _check_shape(M, roots, k)
        if not y.is_integral():
            yinv = y.inv()
            for i in range(size):
                M[i][a0] = M[i][a0] * yinv
                M[i][b0] = M[i][b0] * y
            for i in range(size):
                M[i][b0] = M[i][b0] + y * M[i][a0]
            ws[k] = y
            ms[k] = -y.valuation()
            if max_sum is not None and sum(ms) > max_sum:
                return None
        ys[k] = y
        P = M
    return IwasawaResult(word, ys, ws, ms, P)


def _check_shape(M, roots, k):
    """p'_k lies in U^-_{<k} T U^+_{>k}: its LDU factors are supported on those roots."""
    size = len(M)
    L, D, U = ldu(M)
    earlier = set(roots[:k])
    later = set(roots[k + 1:])
    for i in range(size):
        for j in range(size):
            if i > j and not L[i][j].is_zero() and (j + 1, i + 1) not in earlier:
                raise AssertionError(f"lower factor has entry at {(i + 1, j + 1)} outside U^-_<k")
            if i < j and not U[i][j].is_zero() and (i + 1, j + 1) not in later:
                raise AssertionError(f"upper factor has entry at {(i + 1, j + 1)} outside U^+_>k")


def ldu(M):
    """Gaussian LDU factorization over a field (exact scalars)."""
    size = len(M)
    one = M[0][0].one_like()
    zero = one.zero_like()
    A = [row[:] for row in M]
    L = identity(size, one)
    for j in range(size):
        piv = A[j][j]
        if piv.is_zero():
            raise ZeroDivisionError("matrix has no LDU factorization")
        pinv = piv.inv()
        for i in range(j + 1, size):
            f = A[i][j] * pinv
            L[i][j] = f
            A[i] = [A[i][c] - f * A[j][c] for c in range(size)]
    D = [[A[i][i] if i == j else zero for j in range(size)] for i in range(size)]
    U = [[(A[i][j] * A[i][i].inv() if i != j else one) if j >= i else zero for j in range(size)]
         for i in range(size)]
    return L, D, U


def inverse_matrix(M):
    L, D, U = ldu(M)
    size = len(M)
    one = M[0][0].one_like()
    zero = one.zero_like()
    # invert unitriangular factors by substitution
    Linv = identity(size, one)
    for i in range(size):
        for j in range(i):
            s = zero
            for k in range(j, i):
                s = s + L[i][k] * Linv[k][j]
            Linv[i][j] = -s
    Uinv = identity(size, one)
    for i in range(size - 1, -1, -1):
        for j in range(i + 1, size):
            s = zero
            for k in range(i + 1, j + 1):
                s = s + U[i][k] * Uinv[k][j]
            Uinv[i][j] = -s
    Dinv = [[D[i][i].inv() if i == j else zero for j in range(size)] for i in range(size)]
    return mat_mul(mat_mul(Uinv, Dinv), Linv)


def expected_diagonal(res):
    """Diagonal of prod_{i=N}^{1} h_{-alpha_i}(w_i), h_{-(a,b)}(w) = diag(w^-1 at a, w at b)."""
    roots = root_order(res.word)
    size = res.word.r + 1
    one = res.p1[0][0].one_like()
    diag = [one] * size
    for k, (a, b) in enumerate(roots):
        w = res.w_value(k)
        diag[a - 1] = diag[a - 1] * w.inv()
        diag[b - 1] = diag[b - 1] * w
    return diag


def kappa(coords, res):
    u = unipotent_from_coordinates(coords, res.word)
    return mat_mul(inverse_matrix(res.p1), u)


def classify_cell_sl3(x, y, z):
    """Cell of u = e_{-(1,2)}(x) e_{-(1,3)}(y) e_{-(2,3)}(z) from the eight-row SL3 table.

    Returns (m1, m2, m3) and the matching row (1..8).  Conditions involving
    quotients are evaluated only when the row's earlier conditions make the
    quotient defined.
    """
    w = x * z - y

    def big(e):
        return not e.is_integral()

    rows = [
        lambda: big(z) and big(y / z) and big(w * z / y),
        lambda: big(z) and big(y / z) and not big(w * z / y),
        lambda: big(z) and not big(y / z) and big(w),
        lambda: big(z) and not big(y / z) and not big(w),
        lambda: not big(z) and big(y) and big(x / y),
        lambda: not big(z) and big(y) and not big(x / y),
        lambda: not big(z) and not big(y) and big(x),
        lambda: not big(z) and not big(y) and not big(x),
    ]
    hits = [k + 1 for k, cond in enumerate(rows) if cond()]
    assert len(hits) == 1, f"table rows {hits} match"
    row = hits[0]

    def mv(e):
        return max(0, -e.valuation())

    if row <= 4:
        m3 = mv(z)
        if row <= 2:
            m2 = mv(y / z)
            m1 = mv(w * z / y)
        else:
            m2 = 0
            m1 = mv(w)
    else:
        m3 = 0
        if row <= 6:
            m2 = mv(y)
            m1 = mv(x / y)
        else:
            m2 = 0
            m1 = mv(x)
    return (m1, m2, m3), row


def hilbert(x, y, n, p):
    """Tame symbol (x, y) in mu_n as an exponent k mod n, identified with exp(2 pi i k / n)."""
    if x.is_zero() or y.is_zero():
        raise ValueError("Hilbert symbol needs nonzero arguments")
    if (p - 1) % n:
        raise InvalidContext(f"{n} does not divide p - 1 = {p - 1}")
    vx, vy = x.valuation(), y.valuation()
    c = (x ** vy) * (y ** (-vx))
    if (vx * vy) % 2:
        c = -c
    return _dlog(c.lead(), p) % n


_DLOG_CACHE = {}


def _dlog(u, p):
    table = _DLOG_CACHE.get(p)
    if table is None:
        from ..algebra import primitive_root
        g = primitive_root(p)
        table = {}
        x = 1
        for k in range(p - 1):
            table[x] = k
            x = x * g % p
        _DLOG_CACHE[p] = table
    return table[u % p]


def residue_exponent(u, n, p):
    """k mod n with chi(residue of u) = exp(2 pi i k / n)."""
    return _dlog(u, p) % n


def psi(x, p):
    """Additive character exp(2 pi i a_{-1} / p), a_{-1} the coefficient of t^{-1}."""
    return cmath.exp(2j * cmath.pi * x.coefficient(-1) / p)


def psi_lambda_exponent(u, lam):
    """a with psi_lam(u) = exp(2 pi i a / p), psi_lam(u) = prod_i psi(t^{lam_i} u_{i+1,i})."""
    return sum(u[i + 1][i].coefficient(-1 - lam[i]) for i in range(len(lam)))


def psi_lambda(u, lam, p):
    return cmath.exp(2j * cmath.pi * (psi_lambda_exponent(u, lam) % p) / p)


def psi_product_formula(res, lam, p):
    """psi_lam(u) as a product over roots of Psi^{i,j}, read from the y and w variables."""
    roots = root_order(res.word)
    index = {a: k for k, a in enumerate(roots)}
    r = res.word.r
    total = 0
    for (i, j), k in index.items():
        if j != i + 1 and res.y[index[(i + 1, j)]].is_integral():
            continue
        arg = res.y[k].t_shift(lam[i - 1])
        for kk in range(j + 1, r + 2):
            arg = arg * res.w_value(index[(i, kk)])
            if i + 1 < kk:
                arg = arg * res.w_value(index[(i + 1, kk)]).inv()
        total += arg.coefficient(-1)
    return cmath.exp(2j * cmath.pi * (total % p) / p)


@dataclass(frozen=True)
class FValue:
    """f(u) = q^{q_power} x^{x_exponents} zeta, zeta = exp(2 pi i zeta_exponent / n)."""

    q_power: int
    x_exponents: tuple
    zeta_exponent: int
    n: int

    def to_complex(self, q, x_values):
        out = complex(q) ** self.q_power * cmath.exp(2j * cmath.pi * self.zeta_exponent / self.n)
        for x, e in zip(x_values, self.x_exponents):
            out *= complex(x) ** e
        return out


def f_exponents(res):
    """e_k = m_k + sum_{i<k} <alpha_i, alpha_k^vee> m_i."""
    roots = root_order(res.word)
    out = []
    for k, beta in enumerate(roots):
        out.append(res.m[k] + sum(pairing(roots[i], beta) * res.m[i] for i in range(k)))
    return out


def zeta_exponent(res, n, p):
    """Exponent of prod_k (t, u_k)^{e_k} with u_k = t^{m_k} w_k, a unit."""
    es = f_exponents(res)
    total = 0
    for k, e in enumerate(es):
        if res.w[k] is None or e % n == 0:
            continue
        # (t, u) = residue(u)^{-1} for a unit u
        total -= e * residue_exponent(res.w[k].lead(), n, p)
    return total % n


def f_value(res, n, p):
    rs = RootSystemA(res.word.r)
    roots = root_order(res.word)
    q_power = -sum(rs.height(a) * mk for a, mk in zip(roots, res.m))
    exps = [0] * rs.r
    for a, mk in zip(roots, res.m):
        for i, h in enumerate(rs.coroot(a)):
            exps[i] += h * mk
    return FValue(q_power, tuple(exps), zeta_exponent(res, n, p), n)


def check_rank(word):
    if word.r > 3:
        raise UnsupportedConfiguration("the simulator is validated for r <= 3 only")


def random_laurent(rng, p, low=-3, high=3):
    coeffs = {k: rng.randrange(p) for k in range(low, high + 1)}
    return LaurentElem.from_coefficients(coeffs, p)
