"""Type A root data, reduced words of the long element and the Kostant partition function.

Roots of A_r are index pairs (i, j) with i != j in 1..r+1; (i, j) with i < j is
positive and stands for e_i - e_j.  Coroots are written in the basis of simple
coroots as integer tuples of length r.
"""
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import gcd

from .errors import InvalidArgument, InvalidWord


class CartanCase(Enum):
    """Rank two Cartan types with the entries (a_ij, a_ji) of the local word (i, j, ...)."""

    A1xA1 = (0, 0)
    A2 = (-1, -1)
    B2 = (-2, -1)
    B2_DUAL = (-1, -2)
    G2 = (-3, -1)
    G2_DUAL = (-1, -3)

    @property
    def a_ij(self):
        return self.value[0]

    @property
    def a_ji(self):
        return self.value[1]

    @property
    def segment_length(self):
        return {0: 2, 1: 3, 2: 4, 3: 6}[self.a_ij * self.a_ji]

    def swapped(self):
        """The case seen from the other end of the braid move (i and j exchanged)."""
        return CartanCase((self.a_ji, self.a_ij))


def pairing(alpha, beta):
    """<alpha, beta^vee> for type A roots given as index pairs."""
    i, j = alpha
    k, l = beta
    return (i == k) - (i == l) - (j == k) + (j == l)


def reflect(s, root):
    """Apply the simple reflection s_s (swap of s and s+1) to a root."""
    def sw(x):
        if x == s:
            return s + 1
        if x == s + 1:
            return s
        return x
    return (sw(root[0]), sw(root[1]))


def is_positive(root):
    return root[0] < root[1]


@dataclass(frozen=True)
class RootSystemA:
    r: int
    n: int = 1
    positive_roots: tuple = field(init=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.r, int) or self.r < 1:
            raise InvalidArgument(f"rank must be a positive integer, got {self.r!r}")
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidArgument(f"cover degree must be a positive integer, got {self.n!r}")
        roots = tuple((i, j) for i in range(1, self.r + 2) for j in range(i + 1, self.r + 2))
        object.__setattr__(self, "positive_roots", roots)

    @property
    def N(self):
        return len(self.positive_roots)

    @property
    def simple_roots(self):
        return tuple((i, i + 1) for i in range(1, self.r + 1))

    def coroot(self, root):
        """Coroot of a positive root in the simple coroot basis."""
        i, j = root
        return tuple(1 if i <= k < j else 0 for k in range(1, self.r + 1))

    def height(self, root):
        return root[1] - root[0]

    def rho_pairing(self, root):
        """<rho, root^vee>; equals the height in type A."""
        return root[1] - root[0]

    def l_alpha(self, root):
        return 1

    def n_alpha(self, root):
        return self.n // gcd(self.n, self.l_alpha(root))

    def pairing_table(self):
        return {(a, b): pairing(a, b) for a in self.positive_roots for b in self.positive_roots}


def build_type_a(r, n=1):
    return RootSystemA(r, n)


def _permutation_of(word, r):
    """One-line notation of s_{i_1} ... s_{i_k} acting on 1..r+1."""
    perm = list(range(1, r + 2))
    for s in word:
        perm[s - 1], perm[s] = perm[s], perm[s - 1]
    return perm


def word_length(word, r):
    """Coxeter length of the element represented by the word."""
    perm = _permutation_of(word, r)
    return sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])


def is_reduced(word, r):
    return all(1 <= s <= r for s in word) and word_length(word, r) == len(word)


def inversion_set(word, r):
    """Positive roots sent negative by w = s_{i_1} ... s_{i_k}."""
    out = []
    for root in RootSystemA(r).positive_roots:
        img = root
        for s in reversed(word):
            img = reflect(s, img)
        if not is_positive(img):
            out.append(root)
    return out


@dataclass(frozen=True)
class ReducedWord:
    letters: tuple
    r: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(s) for s in self.letters))
        if self.r < 1:
            raise InvalidArgument("rank must be positive")
        N = self.r * (self.r + 1) // 2
        if len(self.letters) != N or not is_reduced(self.letters, self.r):
            raise InvalidWord(f"{self.letters} is not a reduced word of w0 in rank {self.r}")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, k):
        return self.letters[k]

    @property
    def root_order(self):
        return root_order(self)


@lru_cache(maxsize=None)
def _root_order(letters, r):
    N = len(letters)
    out = []
    for j in range(N):
        root = (letters[j], letters[j] + 1)
        # alpha_j = s_{i_N} ... s_{i_{j+1}} alpha_{i_j}: apply s_{i_{j+1}} first
        for k in range(j + 1, N):
            root = reflect(letters[k], root)
        out.append(root)
    return tuple(out)


def root_order(word):
    """Positive roots in the order induced by a reduced word of w0."""
    if not isinstance(word, ReducedWord):
        raise InvalidWord("expected a ReducedWord")
    roots = _root_order(word.letters, word.r)
    if len(set(roots)) != len(roots) or not all(is_positive(a) for a in roots):
        raise InvalidWord(f"{word.letters} does not induce a root order")
    return list(roots)


def gt_word(r):
    """Reduced word (r, r-1, ..., 1)(r, ..., 2) ... (r), inducing the lexicographic root order."""
    if r < 1:
        raise InvalidArgument("rank must be positive")
    letters = []
    for low in range(1, r + 1):
        letters.extend(range(r, low - 1, -1))
    return ReducedWord(tuple(letters), r)


def printed_gt_word(r):
    """The word s_1 (s_2 s_1) (s_3 s_2 s_1) ...; it induces the reverse-lexicographic order."""
    letters = []
    for top in range(1, r + 1):
        letters.extend(range(top, 0, -1))
    return ReducedWord(tuple(letters), r)


@dataclass(frozen=True)
class BraidMove:
    position: int          # 1-based index of the first letter touched
    case: CartanCase


def braid_neighbors(word):
    """All words one commutation or one braid move away, sorted by move position."""
    w = word.letters
    out = []
    for p in range(len(w) - 1):
        i, j = w[p], w[p + 1]
        if abs(i - j) > 1:
            new = w[:p] + (j, i) + w[p + 2:]
            out.append((ReducedWord(new, word.r), BraidMove(p + 1, CartanCase.A1xA1)))
        if p + 2 < len(w) and abs(i - j) == 1 and w[p + 2] == i:
            new = w[:p] + (j, i, j) + w[p + 3:]
            out.append((ReducedWord(new, word.r), BraidMove(p + 1, CartanCase.A2)))
    out.sort(key=lambda t: (t[1].position, t[1].case.value))
    return out


def braid_chain(source, target):
    """Shortest chain of braid moves from source to target.

    Breadth-first search with neighbours in position order, so among the
    shortest chains the lexicographically smallest position sequence wins.
    """
    if source.r != target.r:
        raise InvalidArgument("words of different rank")
    if source == target:
        return []
    parent = {source.letters: None}
    queue = deque([source])
    while queue:
        w = queue.popleft()
        for nxt, move in braid_neighbors(w):
            if nxt.letters in parent:
                continue
            parent[nxt.letters] = (w, move)
            if nxt == target:
                chain = []
                cur = nxt
                while parent[cur.letters] is not None:
                    prev, mv = parent[cur.letters]
                    chain.append((mv, cur))
                    cur = prev
                return chain[::-1]
            queue.append(nxt)
    raise InvalidWord(f"{target.letters} not reachable from {source.letters}")


def reduced_words(r):
    """All reduced words of w0 in rank r, in breadth-first order from gt_word(r)."""
    start = gt_word(r)
    seen = {start.letters: start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for nxt, _ in braid_neighbors(w):
            if nxt.letters not in seen:
                seen[nxt.letters] = nxt
                queue.append(nxt)
    return list(seen.values())


def kostant_partition(lam, r=None):
    """Number of ways to write lam (simple coroot coordinates) as a sum of positive coroots."""
    lam = tuple(int(c) for c in lam)
    if r is None:
        r = len(lam)
    if len(lam) != r:
        raise InvalidArgument("coweight length must equal the rank")
    if r == 0:
        return 1
    rs = RootSystemA(r)
    coroots = tuple(rs.coroot(a) for a in rs.positive_roots)
    return _count(lam, coroots, 0)


@lru_cache(maxsize=None)
def _count(lam, coroots, start):
    if any(c < 0 for c in lam):
        return 0
    if not any(lam):
        return 1
    total = 0
    for k in range(start, len(coroots)):
        c = coroots[k]
        nxt = tuple(a - b for a, b in zip(lam, c))
        total += _count(nxt, coroots, k)
    return total
