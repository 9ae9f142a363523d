"""Finite root systems of types A-G in exact simple-root coordinates.

Roots and weights are tuples of coordinates over the simple roots
(Bourbaki numbering within each component, components concatenated).
Coweights are tuples of coordinates over the simple coroots.  All node
indices in this package are 0-based.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import invert, mat_vec

VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


def _edges(typ, n):
    """Bonds of the Dynkin diagram as (i, j, a_ij, a_ji), 0-based chain order."""
    if typ == "A":
        return [(i, i + 1, -1, -1) for i in range(n - 1)]
    if typ == "B":
        # alpha_n short: <alpha_n^vee, alpha_{n-1}> = -2
        e = [(i, i + 1, -1, -1) for i in range(n - 2)]
        e.append((n - 2, n - 1, -1, -2))
        return e
    if typ == "C":
        # alpha_n long: <alpha_{n-1}^vee, alpha_n> = -2
        e = [(i, i + 1, -1, -1) for i in range(n - 2)]
        e.append((n - 2, n - 1, -2, -1))
        return e
    if typ == "D":
        e = [(i, i + 1, -1, -1) for i in range(n - 2)]
        e.append((n - 3, n - 1, -1, -1))
        return e
    if typ == "E":
        # chain 1-3-4-5-6(-7)(-8) with 2 attached to 4
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        e = [(chain[k], chain[k + 1], -1, -1) for k in range(len(chain) - 1)]
        e.append((1, 3, -1, -1))
        return e
    if typ == "F":
        # alpha_1, alpha_2 long; <alpha_3^vee, alpha_2> = -2
        return [(0, 1, -1, -1), (1, 2, -1, -2), (2, 3, -1, -1)]
    if typ == "G":
        # alpha_1 short: <alpha_1^vee, alpha_2> = -3
        return [(0, 1, -3, -1)]
    raise ValueError(f"unknown type {typ!r}")


def _lengths(typ, n):
    """d_i = (alpha_i, alpha_i)/2, normalized so long roots have d = 1."""
    one, half = Fraction(1), Fraction(1, 2)
    if typ in ("A", "D", "E"):
        return [one] * n
    if typ == "B":
        return [one] * (n - 1) + [half]
    if typ == "C":
        return [half] * (n - 1) + [one]
    if typ == "F":
        return [one, one, half, half]
    if typ == "G":
        return [Fraction(1, 3), one]
    raise ValueError(f"unknown type {typ!r}")


def cartan_matrix(typ, n):
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, aij, aji in _edges(typ, n):
        a[i][j] = aij
        a[j][i] = aji
    return a


@dataclass(frozen=True)
class RootSystem:
    components: tuple
    cartan: tuple
    lengths: tuple
    node_component: tuple

    @property
    def rank(self):
        return len(self.cartan)

    def component_nodes(self, c):
        return tuple(i for i in range(self.rank) if self.node_component[i] == c)


@lru_cache(maxsize=None)
def build_root_system(components):
    """Build a root system from a tuple of (type, rank) components."""
    if not components:
        raise ValueError("empty component list")
    for typ, n in components:
        if typ not in VALID_RANKS or not VALID_RANKS[typ](n):
            raise ValueError(f"invalid component {typ}{n}")
    total = sum(n for _, n in components)
    cartan = [[0] * total for _ in range(total)]
    lengths = []
    node_component = []
    offset = 0
    for ci, (typ, n) in enumerate(components):
        block = cartan_matrix(typ, n)
        for i in range(n):
            for j in range(n):
                cartan[offset + i][offset + j] = block[i][j]
        lengths.extend(_lengths(typ, n))
        node_component.extend([ci] * n)
        offset += n
    for i in range(total):
        for j in range(total):
            if lengths[i] * cartan[i][j] != lengths[j] * cartan[j][i]:
                raise ValueError("asymmetric inner product")
    return RootSystem(
        components=tuple(components),
        cartan=tuple(tuple(row) for row in cartan),
        lengths=tuple(lengths),
        node_component=tuple(node_component),
    )


def pairing(rs, i, w):
    """<alpha_i^vee, w> for w in simple-root coordinates."""
    return sum(rs.cartan[i][j] * w[j] for j in range(rs.rank))


def pair_coweight(rs, cw, w):
    """<c, w> for a coweight c in simple-coroot coordinates."""
    return sum(cw[i] * pairing(rs, i, w) for i in range(rs.rank))


def reflect(rs, i, w):
    """Simple reflection s_i applied to w in simple-root coordinates."""
    p = pairing(rs, i, w)
    out = list(w)
    out[i] -= p
    return tuple(out)


def inner_product(rs, v, w):
    """(v, w) with long roots normalized to squared length 2 per component."""
    total = Fraction(0)
    for i in range(rs.rank):
        if v[i]:
            for j in range(rs.rank):
                if w[j]:
                    total += v[i] * w[j] * rs.lengths[i] * rs.cartan[i][j]
    return total


def length_sq(rs, v):
    return inner_product(rs, v, v)


def coroot(rs, root):
    """Coroot 2*root/(root,root) in simple-coroot coordinates."""
    sq = length_sq(rs, root)
    return tuple(Fraction(2 * b * rs.lengths[j], 1) / sq for j, b in enumerate(root))


@lru_cache(maxsize=None)
def positive_roots(rs):
    """All positive roots, enumerated by height."""
    n = rs.rank
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found = set(simples)
    frontier = list(simples)
    ordered = list(simples)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                down = 0
                cur = list(beta)
                while True:
                    cur[i] -= 1
                    if any(c < 0 for c in cur) or tuple(cur) not in found:
                        break
                    down += 1
                if down - pairing(rs, i, beta) > 0:
                    up = list(beta)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in found:
                        found.add(cand)
                        nxt.append(cand)
                        ordered.append(cand)
        frontier = nxt
    return tuple(ordered)


@lru_cache(maxsize=None)
def root_set(rs):
    pos = positive_roots(rs)
    return frozenset(pos) | frozenset(tuple(-x for x in b) for b in pos)


def highest_roots(rs, component=0):
    """(highest root, highest short root) of one irreducible component."""
    nodes = set(rs.component_nodes(component))
    roots = [b for b in positive_roots(rs)
             if all(b[j] == 0 or j in nodes for j in range(rs.rank))]
    dominant = [b for b in roots if all(pairing(rs, i, b) >= 0 for i in nodes)]
    min_sq = min(length_sq(rs, b) for b in roots)
    long_dom = [b for b in dominant if length_sq(rs, b) == 2]
    short_dom = [b for b in dominant if length_sq(rs, b) == min_sq]
    if len(long_dom) != 1 or len(short_dom) != 1:
        raise ValueError("component is not irreducible")
    theta, theta_short = long_dom[0], short_dom[0]
    for b in roots:
        if any(theta[j] < b[j] for j in range(rs.rank)):
            raise ValueError("highest root is not coordinate-wise maximal")
    return theta, theta_short


def two_rho(rs):
    total = [0] * rs.rank
    for b in positive_roots(rs):
        for j in range(rs.rank):
            total[j] += b[j]
    return tuple(total)


@lru_cache(maxsize=None)
def _cartan_inverse(rs):
    return invert([list(row) for row in rs.cartan])


def fundamental_weight(rs, i):
    """The weight with <alpha_j^vee, .> = delta_ij, in simple-root coordinates."""
    inv = _cartan_inverse(rs)
    return tuple(inv[k][i] for k in range(rs.rank))


def rho(rs):
    inv = _cartan_inverse(rs)
    return tuple(sum(row) for row in inv)


def subsystem_positive_count(rs, nodes):
    nodes = set(nodes)
    return sum(1 for b in positive_roots(rs)
               if all(b[j] == 0 or j in nodes for j in range(rs.rank)))


def longest_subsystem_word(rs, nodes):
    """A reduced word (first letter applied first) for the longest element
    of the parabolic subgroup generated by the given nodes."""
    nodes = sorted(set(nodes))
    p = {i: 1 for i in nodes}
    word = []
    while True:
        i = next((k for k in nodes if p[k] > 0), None)
        if i is None:
            break
        word.append(i)
        pi = p[i]
        for k in nodes:
            p[k] -= pi * rs.cartan[k][i]
    if len(word) != subsystem_positive_count(rs, nodes):
        raise ValueError("longest word has wrong length")
    return word


def word_action(rs, word, w):
    for i in word:
        w = reflect(rs, i, w)
    return w


def word_matrix(rs, word):
    """Matrix of the word acting on simple-root coordinate columns."""
    n = rs.rank
    cols = []
    for j in range(n):
        e = tuple(1 if k == j else 0 for k in range(n))
        cols.append(word_action(rs, word, e))
    return [[cols[j][i] for j in range(n)] for i in range(n)]


@lru_cache(maxsize=None)
def minus_w0_permutation(rs):
    """The permutation i -> j with -w_0(alpha_i) = alpha_j."""
    word = longest_subsystem_word(rs, range(rs.rank))
    perm = []
    for i in range(rs.rank):
        e = tuple(1 if k == i else 0 for k in range(rs.rank))
        img = tuple(-x for x in word_action(rs, word, e))
        ones = [k for k, x in enumerate(img) if x == 1]
        if sum(img) != 1 or len(ones) != 1:
            raise ValueError("-w_0 does not permute the simple roots")
        perm.append(ones[0])
    return tuple(perm)


def _node_signature(mat, i):
    return tuple(sorted(mat[i][j] * mat[j][i] for j in range(len(mat)) if j != i and mat[i][j]))


def _match_cartan(std, given):
    """Bijection f with std[i][j] == given[f(i)][f(j)], or None."""
    n = len(std)
    std_sig = [_node_signature(std, i) for i in range(n)]
    given_sig = [_node_signature(given, i) for i in range(n)]
    assignment = [None] * n
    used = [False] * n

    def backtrack(i):
        if i == n:
            return True
        for cand in range(n):
            if used[cand] or std_sig[i] != given_sig[cand]:
                continue
            ok = all(assignment[j] is None
                     or (std[i][j] == given[cand][assignment[j]]
                         and std[j][i] == given[assignment[j]][cand])
                     for j in range(n))
            if ok:
                assignment[i] = cand
                used[cand] = True
                if backtrack(i + 1):
                    return True
                assignment[i] = None
                used[cand] = False
        return False

    return list(assignment) if backtrack(0) else None


def identify_cartan(mat):
    """Identify an irreducible Cartan matrix.

    Returns (type, rank, mapping) with mapping[standard 0-based index] =
    input index, preferring A < B < C < D < E < F < G on coincidences.
    """
    n = len(mat)
    candidates = [t for t in "ABCDEFG" if VALID_RANKS[t](n)]
    for typ in candidates:
        std = cartan_matrix(typ, n)
        found = _match_cartan(std, mat)
        if found is not None:
            return typ, n, found
    return None
