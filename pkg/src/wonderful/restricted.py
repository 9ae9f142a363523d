"""Restricted root system of an involution.

The restriction of a root beta is beta - sigma(beta), kept in ambient
simple-root coordinates.  The distinct restrictions of the white simple
roots form the restricted simple system; the restricted coroot of a
restriction is its metric coroot 2v/(v,v) in ambient coroot coordinates.
"""

from dataclasses import dataclass
from fractions import Fraction

from .linalg import solve
from .involution import NONREDUCED, REAL, classify_simple, sigma_root
from .rootsystem import (
    coroot,
    highest_roots,
    identify_cartan,
    inner_product,
    pair_coweight,
    positive_roots,
)


@dataclass(frozen=True)
class RestrictedRootSystem:
    involution: object
    restricted_simple: tuple
    fibers: tuple
    restricted_positive: tuple
    type_label: str
    rank: int
    nonreduced: bool
    doubled_index: object
    cartan: tuple
    theta_bar: tuple
    theta_bar_covector: tuple
    coroots: tuple

    @property
    def root_system(self):
        return self.involution.root_system


def restrict_root(inv, v):
    img = sigma_root(inv, v)
    return tuple(a - b for a, b in zip(v, img))


def expand(basis, v):
    """Coefficients of v over a linearly independent basis, or None."""
    if all(x == 0 for x in v):
        return None
    gram = [[sum(Fraction(a) * Fraction(b) for a, b in zip(x, y)) for y in basis]
            for x in basis]
    rhs = [sum(Fraction(a) * Fraction(b) for a, b in zip(x, v)) for x in basis]
    coeffs = solve(gram, rhs)
    recon = [sum(c * Fraction(x[k]) for c, x in zip(coeffs, basis)) for k in range(len(v))]
    if recon != [Fraction(x) for x in v]:
        return None
    return coeffs


def build_restricted(inv):
    """Build and validate the restricted root system of an involution."""
    rs = inv.root_system
    dbar = []
    fibers = {}
    for i in inv.delta1:
        v = restrict_root(inv, tuple(1 if k == i else 0 for k in range(rs.rank)))
        if v not in fibers:
            fibers[v] = []
            dbar.append(v)
        fibers[v].append(i)
    rank = len(dbar)

    rbar_pos = []
    seen = set()
    for beta in positive_roots(rs):
        v = restrict_root(inv, beta)
        if any(v) and v not in seen:
            seen.add(v)
            rbar_pos.append(v)
    for v in rbar_pos:
        coeffs = expand(dbar, v)
        if coeffs is None or any(c.denominator != 1 or c < 0 for c in coeffs):
            raise ValueError("restricted root outside the nonnegative span "
                             "of the restricted simple roots")

    doubled = [i for i, v in enumerate(dbar)
               if tuple(2 * x for x in v) in seen]
    if len(doubled) > 1:
        raise ValueError("more than one doubled restricted simple root")
    doubled_index = doubled[0] if doubled else None

    cartan = []
    for v in dbar:
        row = []
        for w in dbar:
            c = 2 * inner_product(rs, v, w) / inner_product(rs, v, v)
            if c.denominator != 1:
                raise ValueError("restricted Cartan matrix is not integral")
            row.append(int(c))
        cartan.append(tuple(row))
    ident = identify_cartan([list(r) for r in cartan])
    if ident is None:
        raise ValueError("restricted simple system has no Cartan type")
    letter = ident[0]
    nonreduced = doubled_index is not None
    if nonreduced:
        if letter not in ("A", "B") or (letter == "A" and rank != 1):
            raise ValueError("nonreduced restriction without B/BC shape")
        type_label = f"BC{rank}"
    else:
        type_label = f"{letter}{rank}"

    heights = {}
    for v in rbar_pos:
        coeffs = expand(dbar, v)
        heights[v] = sum(coeffs)
    theta_bar = max(rbar_pos, key=lambda v: heights[v])
    for v in rbar_pos:
        diff = expand(dbar, tuple(a - b for a, b in zip(theta_bar, v)))
        if diff is not None and any(c < 0 for c in diff):
            raise ValueError("no dominance-maximal restricted root")
    theta = highest_roots(rs, 0)[0]
    if restrict_root(inv, theta) != theta_bar:
        raise ValueError("highest restricted root is not the restriction "
                         "of the highest root")
    theta_bar_covector = coroot(rs, theta_bar)

    coroots = []
    for idx, v in enumerate(dbar):
        per_member = set()
        for i in fibers[v]:
            e = tuple(1 if k == i else 0 for k in range(rs.rank))
            case = classify_simple(inv, i)
            alpha_vee = coroot(rs, e)
            sig_vee = coroot(rs, sigma_root(inv, e))
            if case == REAL:
                abar_vee = tuple(x / 2 for x in alpha_vee)
            elif case == NONREDUCED:
                abar_vee = tuple(a - b for a, b in zip(alpha_vee, sig_vee))
            else:
                abar_vee = tuple((a - b) / 2 for a, b in zip(alpha_vee, sig_vee))
            ahat_vee = tuple(x / 2 for x in abar_vee) if case == NONREDUCED else abar_vee
            per_member.add((abar_vee, ahat_vee))
        if len(per_member) != 1:
            raise ValueError("restricted coroot differs across a fiber")
        abar_vee, ahat_vee = per_member.pop()
        if abar_vee != coroot(rs, v):
            raise ValueError("case formula disagrees with the metric coroot")
        if pair_coweight(rs, abar_vee, v) != 2:
            raise ValueError("restricted coroot does not pair to 2")
        longest = tuple(2 * x for x in v) if idx == doubled_index else v
        if ahat_vee != coroot(rs, longest):
            raise ValueError("primitive coroot disagrees with the longest multiple")
        coroots.append((abar_vee, ahat_vee))

    return RestrictedRootSystem(
        involution=inv,
        restricted_simple=tuple(dbar),
        fibers=tuple(tuple(fibers[v]) for v in dbar),
        restricted_positive=tuple(rbar_pos),
        type_label=type_label,
        rank=rank,
        nonreduced=nonreduced,
        doubled_index=doubled_index,
        cartan=tuple(cartan),
        theta_bar=theta_bar,
        theta_bar_covector=theta_bar_covector,
        coroots=tuple(coroots),
    )


def restricted_coroot(rrs, i):
    """(abar_vee, ahat_vee) for the white node i."""
    for idx, fiber in enumerate(rrs.fibers):
        if i in fiber:
            return rrs.coroots[idx]
    raise ValueError(f"node {i} is not white")


def fiber_index(rrs, i):
    for idx, fiber in enumerate(rrs.fibers):
        if i in fiber:
            return idx
    raise ValueError(f"node {i} is not white")


def is_exceptional(rrs):
    """Exceptional means some white node is nonreduced and not fixed by
    sigma_bar; returns (flag, witness pair or None)."""
    inv = rrs.involution
    for i in inv.delta1:
        j = inv.sigma_bar[i]
        if j != i and classify_simple(inv, i) == NONREDUCED:
            return True, (i, j)
    return False, None


def theta_bar_expansion(rrs):
    """Nonnegative integer coefficients of theta_bar_covector over the
    primitive coroots {ahat_vee}."""
    basis = [c[1] for c in rrs.coroots]
    coeffs = expand(basis, rrs.theta_bar_covector)
    if coeffs is None or any(c.denominator != 1 or c < 0 for c in coeffs):
        raise ValueError("theta_bar covector is not a nonnegative integer "
                         "combination of the primitive coroots")
    return tuple(int(c) for c in coeffs)
