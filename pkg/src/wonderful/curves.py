"""Colors and curve classes on the compactification.

Colors index a basis of the Picard group.  Curve classes are integer
vectors over the colors; the class of a covering family of minimal
rational curves solves psi(gamma) = theta_bar_covector.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .involution import sigma_root
from .restricted import fiber_index, is_exceptional, theta_bar_expansion
from .rootsystem import (
    _cartan_inverse,
    longest_subsystem_word,
    pair_coweight,
    word_matrix,
)


@dataclass(frozen=True)
class ColorSet:
    colors: tuple
    picard_rank: int


def build_colors(inv):
    """Colors: white nodes merged when beta = -sigma(alpha) with
    <alpha^vee, beta> = 0."""
    rs = inv.root_system
    merged = []
    used = set()
    for i in inv.delta1:
        if i in used:
            continue
        e = tuple(1 if k == i else 0 for k in range(rs.rank))
        img = sigma_root(inv, e)
        partner = None
        for j in inv.delta1:
            if j != i and img == tuple(-1 if k == j else 0 for k in range(rs.rank)) \
                    and rs.cartan[i][j] == 0:
                partner = j
                break
        if partner is not None and partner not in used:
            merged.append(tuple(sorted((i, partner))))
            used.update((i, partner))
        else:
            merged.append((i,))
            used.add(i)
    colors = tuple(sorted(merged))
    return ColorSet(colors=colors, picard_rank=len(colors))


def lambda_weight(inv, color):
    """Restriction of O_X(color) to the closed orbit, in fundamental
    weight coordinates."""
    rs = inv.root_system
    n = rs.rank
    if len(color) == 2:
        i, j = color
        return tuple(1 if k in (i, j) else 0 for k in range(n))
    i = color[0]
    e = tuple(1 if k == i else 0 for k in range(n))
    if sigma_root(inv, e) == tuple(-x for x in e):
        return tuple(2 if k == i else 0 for k in range(n))
    return tuple(1 if k == i else 0 for k in range(n))


@lru_cache(maxsize=None)
def _w0_matrix(rs):
    return word_matrix(rs, longest_subsystem_word(rs, range(rs.rank)))


def _weight_to_roots(rs, lam):
    inv_a = _cartan_inverse(rs)
    return tuple(sum(inv_a[k][j] * lam[j] for j in range(rs.rank))
                 for k in range(rs.rank))


def pair_weight(rs, cw, lam):
    """<cw, lam> for cw in coroot coordinates, lam in weight coordinates."""
    return sum(Fraction(cw[k]) * lam[k] for k in range(rs.rank))


def degree_functional(rs, eta):
    """lam -> <eta, lam - w_0 lam> on fundamental weight coordinates."""
    w0 = _w0_matrix(rs)

    def degree(lam):
        direct = pair_weight(rs, eta, lam)
        root_coords = _weight_to_roots(rs, lam)
        moved = tuple(sum(w0[k][j] * root_coords[j] for j in range(rs.rank))
                      for k in range(rs.rank))
        return direct - pair_coweight(rs, eta, moved)

    return degree


def color_coroot(rrs, color):
    """The primitive coroot ahat_vee attached to a color."""
    from .restricted import restricted_coroot
    return restricted_coroot(rrs, color[0])


def psi(rrs, colors, gamma):
    """Image of a curve class under psi: sum of gamma_c * ahat_vee(c)."""
    rs = rrs.root_system
    total = [Fraction(0)] * rs.rank
    for c, coeff in zip(colors.colors, gamma):
        vee = color_coroot(rrs, c)[1]
        for k in range(rs.rank):
            total[k] += coeff * vee[k]
    return tuple(total)


def boundary_pairing(rrs, colors):
    """Integer matrix <ahat_vee(color), restricted simple root>."""
    rs = rrs.root_system
    rows = []
    for v in rrs.restricted_simple:
        row = []
        for c in colors.colors:
            val = pair_coweight(rs, color_coroot(rrs, c)[1], v)
            if val.denominator != 1:
                raise ValueError("boundary pairing is not integral")
            row.append(int(val))
        rows.append(tuple(row))
    return tuple(rows)


def minimal_covering_classes(rrs, colors):
    """Curve classes gamma with psi(gamma) = theta_bar_covector,
    ordered with the lower-numbered exceptional color first."""
    expansion = theta_bar_expansion(rrs)
    exceptional, witness = is_exceptional(rrs)
    per_index_colors = []
    for idx in range(rrs.rank):
        cols = [ci for ci, c in enumerate(colors.colors)
                if fiber_index(rrs, c[0]) == idx]
        per_index_colors.append(cols)
        if not cols:
            raise ValueError("restricted index without a color")

    choices = []
    for idx, cols in enumerate(per_index_colors):
        m = expansion[idx]
        if len(cols) == 1:
            choices.append([(m,)])
        else:
            parts = [p for p in product(range(m + 1), repeat=len(cols))
                     if sum(p) == m]
            choices.append(parts)

    classes = []
    for combo in product(*choices):
        gamma = [0] * len(colors.colors)
        for cols, part in zip(per_index_colors, combo):
            for ci, coeff in zip(cols, part):
                gamma[ci] = coeff
        gamma = tuple(gamma)
        if psi(rrs, colors, gamma) == rrs.theta_bar_covector:
            classes.append(gamma)
    classes.sort(reverse=True)
    expected = 2 if exceptional else 1
    if len(classes) != expected:
        raise ValueError(f"expected {expected} minimal classes, "
                         f"found {len(classes)}")
    if exceptional:
        idx = fiber_index(rrs, witness[0])
        if expansion[idx] != 1 or len(per_index_colors[idx]) != 2:
            raise ValueError("exceptional index is not a simple split")
    return classes


def cocharacter_curve(rrs, eta):
    """Limit data of the curve traced by a dominant cocharacter eta."""
    rs = rrs.root_system
    w0 = _w0_matrix(rs)
    at_zero = []
    at_infinity = []
    embedding = False
    for idx, v in enumerate(rrs.restricted_simple):
        p = pair_coweight(rs, eta, v)
        if p != 0:
            at_zero.append(idx)
            if p == 1:
                embedding = True
        moved = tuple(sum(w0[k][j] * v[j] for j in range(rs.rank))
                      for k in range(rs.rank))
        if pair_coweight(rs, eta, moved) != 0:
            at_infinity.append(idx)
    return {
        "orbit_at_zero": tuple(at_zero),
        "orbit_at_infinity": tuple(at_infinity),
        "is_embedding": embedding,
        "degree": degree_functional(rs, eta),
    }


def pushforward_class(rrs, colors):
    """Class of the theta_bar cocharacter curve over the color basis,
    verified against the degree functional on every color weight."""
    inv = rrs.involution
    exceptional, _ = is_exceptional(rrs)
    classes = minimal_covering_classes(rrs, colors)
    if exceptional:
        expected = tuple(a + b for a, b in zip(classes[0], classes[1]))
    else:
        expected = tuple(2 * c for c in classes[0])
    degree = degree_functional(rrs.root_system, rrs.theta_bar_covector)
    for ci, c in enumerate(colors.colors):
        if degree(lambda_weight(inv, c)) != expected[ci]:
            raise ValueError("pushforward class disagrees with the degree "
                             "functional")
    return expected
