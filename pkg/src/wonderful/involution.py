"""Satake data and the induced involution of the root lattice.

A Satake datum is a root system with a set of black nodes and a matching
of white nodes (the diagram arrows).  The induced lattice involution is
sigma = -w_L . tau, where w_L is the longest element of the subgroup
generated by the black nodes and tau extends the arrow matching by the
opposition involution of the black subdiagram.
"""

from dataclasses import dataclass

from .linalg import mat_mul
from .rootsystem import (
    inner_product,
    longest_subsystem_word,
    minus_w0_permutation,
    pairing,
    positive_roots,
    root_set,
    word_matrix,
)

REAL = "REAL"
ORTHOGONAL = "ORTHOGONAL"
NONREDUCED = "NONREDUCED"


class SatakeError(ValueError):
    """Raised when Satake data does not define a valid involution."""


def _fail(detail):
    raise SatakeError(f"inconsistent Satake data: {detail}")


@dataclass(frozen=True)
class SatakeData:
    root_system: object
    black_nodes: tuple
    diagram_involution: tuple

    @property
    def white_nodes(self):
        black = set(self.black_nodes)
        return tuple(i for i in range(self.root_system.rank) if i not in black)


def make_satake(rs, black=(), arrows=()):
    """Build SatakeData from black nodes and white arrow pairs."""
    black = tuple(sorted(set(black)))
    perm = list(range(rs.rank))
    for a, b in arrows:
        perm[a], perm[b] = b, a
    return SatakeData(rs, black, tuple(perm))


@dataclass(frozen=True)
class Involution:
    satake: object
    sigma_matrix: tuple
    tau: tuple
    delta1: tuple
    sigma_bar: tuple

    @property
    def root_system(self):
        return self.satake.root_system


def apply_matrix(mat, v):
    n = len(mat)
    return tuple(sum(mat[i][j] * v[j] for j in range(n)) for i in range(n))


def sigma_root(inv, v):
    return apply_matrix(inv.sigma_matrix, v)


def _check_satake(sd):
    rs = sd.root_system
    n = rs.rank
    black = set(sd.black_nodes)
    perm = sd.diagram_involution
    if not black | set(sd.white_nodes) <= set(range(n)):
        _fail("node index out of range")
    if not sd.white_nodes:
        _fail("no white nodes")
    if sorted(perm) != list(range(n)):
        _fail("diagram involution is not a permutation")
    for i in range(n):
        if perm[perm[i]] != i:
            _fail("diagram involution is not an involution")
        if i in black and perm[i] != i:
            _fail("diagram involution moves a black node")


def _black_components(rs, black):
    black = sorted(black)
    seen = set()
    comps = []
    for start in black:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in black:
                if j not in seen and rs.cartan[i][j] != 0:
                    seen.add(j)
                    comp.append(j)
                    queue.append(j)
        comps.append(sorted(comp))
    return comps


def _complete_tau(sd):
    """Extend the arrow matching by -w_0 of each black component."""
    rs = sd.root_system
    tau = list(sd.diagram_involution)
    for comp in _black_components(rs, sd.black_nodes):
        word = longest_subsystem_word(rs, comp)
        for i in comp:
            e = tuple(1 if k == i else 0 for k in range(rs.rank))
            img = e
            for s in word:
                p = pairing(rs, s, img)
                img = tuple(x - p if k == s else x for k, x in enumerate(img))
            img = tuple(-x for x in img)
            targets = [k for k, x in enumerate(img) if x == 1]
            if sum(img) != 1 or len(targets) != 1 or targets[0] not in comp:
                _fail("black opposition does not permute black nodes")
            tau[i] = targets[0]
    tau = tuple(tau)
    for i in range(rs.rank):
        if tau[tau[i]] != i:
            _fail("completed diagram involution is not an involution")
        for j in range(rs.rank):
            if rs.cartan[tau[i]][tau[j]] != rs.cartan[i][j]:
                _fail("completed diagram involution does not preserve the Cartan matrix")
    return tau


def build_involution(sd):
    """Construct and validate the lattice involution of a Satake datum."""
    _check_satake(sd)
    rs = sd.root_system
    n = rs.rank
    tau = _complete_tau(sd)
    word = longest_subsystem_word(rs, sd.black_nodes)
    wl = word_matrix(rs, word)
    perm_mat = [[1 if i == tau[j] else 0 for j in range(n)] for i in range(n)]
    sigma = [[-x for x in row] for row in mat_mul(wl, perm_mat)]

    square = mat_mul(sigma, sigma)
    if any(square[i][j] != (1 if i == j else 0) for i in range(n) for j in range(n)):
        _fail("sigma is not an involution")
    roots = root_set(rs)
    for beta in positive_roots(rs):
        if apply_matrix(sigma, beta) not in roots:
            _fail("sigma does not preserve the root system")
    for i in range(n):
        for j in range(n):
            gij = rs.lengths[i] * rs.cartan[i][j]
            img_i = apply_matrix(sigma, tuple(1 if k == i else 0 for k in range(n)))
            img_j = apply_matrix(sigma, tuple(1 if k == j else 0 for k in range(n)))
            if inner_product(rs, img_i, img_j) != gij:
                _fail("sigma does not preserve the inner product")
    black = set(sd.black_nodes)
    delta1 = sd.white_nodes
    sigma_bar = {}
    for i in range(n):
        e = tuple(1 if k == i else 0 for k in range(n))
        img = apply_matrix(sigma, e)
        if i in black:
            if img != e:
                _fail("sigma does not fix a black node")
            continue
        if any(x > 0 for x in img) or all(x == 0 for x in img):
            _fail("sigma does not send a white simple root to a negative root")
        neg = tuple(-x for x in img)
        white_support = {k: neg[k] for k in delta1 if neg[k] != 0}
        if len(white_support) != 1 or set(white_support.values()) != {1}:
            _fail("-sigma(alpha) is not a white simple root plus black nodes")
        sigma_bar[i] = next(iter(white_support))
    for i in delta1:
        if sigma_bar[sigma_bar[i]] != i:
            _fail("sigma_bar is not an involution of the white nodes")

    w0 = word_matrix(rs, longest_subsystem_word(rs, range(n)))
    if mat_mul(sigma, w0) != mat_mul(w0, sigma):
        _fail("sigma does not commute with w_0")

    inv = Involution(
        satake=sd,
        sigma_matrix=tuple(tuple(row) for row in sigma),
        tau=tau,
        delta1=delta1,
        sigma_bar=tuple(sigma_bar.get(i, i) for i in range(n)),
    )
    for i in delta1:
        classify_simple(inv, i)
    return inv


def sigma_bar_of(inv, i):
    """The unique white node with coefficient 1 in -sigma(alpha_i)."""
    if i not in inv.delta1:
        raise ValueError(f"node {i} is not white")
    return inv.sigma_bar[i]


def classify_simple(inv, i):
    """Case of a white simple root: REAL, ORTHOGONAL or NONREDUCED."""
    rs = inv.root_system
    if i not in inv.delta1:
        raise ValueError(f"node {i} is not white")
    e = tuple(1 if k == i else 0 for k in range(rs.rank))
    img = sigma_root(inv, e)
    p = pairing(rs, i, img)
    if p == -2:
        if img != tuple(-x for x in e):
            _fail("pairing -2 with sigma(alpha) != -alpha")
        return REAL
    if p == 0:
        return ORTHOGONAL
    if p == 1:
        return NONREDUCED
    _fail(f"<alpha^vee, sigma(alpha)> = {p} is not in {{-2, 0, 1}}")


def is_inner(inv):
    """Whether the involution is inner (trivial twist of the diagram)."""
    rs = inv.root_system
    iota = minus_w0_permutation(rs)
    return all(iota[inv.tau[i]] == i for i in range(rs.rank))


def moved_root_count(inv):
    """Number of roots beta with sigma(beta) != beta."""
    count = 0
    for beta in root_set(inv.root_system):
        if sigma_root(inv, beta) != beta:
            count += 1
    return count
