"""Numerical invariants of the minimal rational curve families."""

from dataclasses import dataclass

from .curves import minimal_covering_classes
from .involution import moved_root_count, sigma_root
from .restricted import is_exceptional
from .rootsystem import (
    coroot,
    highest_roots,
    inner_product,
    pair_coweight,
    positive_roots,
    root_set,
    two_rho,
)

O_MIN = "O_min"
O_SUM = "O_sum_sigma"


def kappa_and_sigma(rrs):
    """(kappa, Sigma): the sum of positive roots sent to negatives, and
    the sum of the restricted simple roots."""
    inv = rrs.involution
    rs = inv.root_system
    kappa = [0] * rs.rank
    for beta in positive_roots(rs):
        img = sigma_root(inv, beta)
        if all(x <= 0 for x in img):
            for k in range(rs.rank):
                kappa[k] += beta[k]
    sigma_sum = [0] * rs.rank
    for v in rrs.restricted_simple:
        for k in range(rs.rank):
            sigma_sum[k] += v[k]
    return tuple(kappa), tuple(sigma_sum)


def dimensions(rrs):
    """(boundary_degree, dim_family, dim_nilpotent_orbit, dim_hc)."""
    rs = rrs.root_system
    kappa, sigma_sum = kappa_and_sigma(rrs)
    eta = rrs.theta_bar_covector
    t = pair_coweight(rs, eta, kappa)
    s = pair_coweight(rs, eta, sigma_sum)
    if t.denominator != 1 or s.denominator != 1:
        raise ValueError("non-integral dimension pairing")
    t, s = int(t), int(s)
    if s not in (1, 2):
        raise ValueError(f"boundary degree {s} is not 1 or 2")
    return s, t + s - 2, 2 * t, t - 1


def sigma_theta_is_minus_theta(inv):
    """Whether sigma sends the highest root to its negative; group type
    (two ambient components swapped by sigma) counts as yes."""
    rs = inv.root_system
    if len(rs.components) == 2:
        return True
    theta = highest_roots(rs, 0)[0]
    return sigma_root(inv, theta) == tuple(-x for x in theta)


def orbit_type(inv):
    return O_MIN if sigma_theta_is_minus_theta(inv) else O_SUM


def check_strong_orthogonality(inv):
    """For sigma(theta) != -theta: theta and -sigma(theta) are strongly
    orthogonal, and -sigma(theta) is the highest root of its component
    of the subsystem orthogonal to theta."""
    rs = inv.root_system
    theta = highest_roots(rs, 0)[0]
    img = sigma_root(inv, theta)
    if img == tuple(-x for x in theta):
        raise ValueError("sigma(theta) = -theta: nothing to check")
    if pair_coweight(rs, coroot(rs, theta), img) != 0:
        raise ValueError("theta and sigma(theta) are not orthogonal")
    roots = root_set(rs)
    for comb in (tuple(a + b for a, b in zip(theta, img)),
                 tuple(a - b for a, b in zip(theta, img))):
        if comb in roots:
            raise ValueError("theta and sigma(theta) are not strongly "
                             "orthogonal")
    neg = tuple(-x for x in img)
    orth_nodes = [i for i in range(rs.rank)
                  if inner_product(rs, tuple(1 if k == i else 0 for k in range(rs.rank)),
                                   theta) == 0]
    orth = set(orth_nodes)
    support = {i for i in range(rs.rank) if neg[i] != 0}
    if not support <= orth:
        raise ValueError("-sigma(theta) is not supported on the "
                         "theta-orthogonal subsystem")
    # component of the support inside the orthogonal subsystem
    comp = set()
    queue = list(support)
    while queue:
        i = queue.pop()
        if i in comp:
            continue
        comp.add(i)
        for j in orth:
            if j not in comp and rs.cartan[i][j] != 0:
                queue.append(j)
    sub = [b for b in positive_roots(rs)
           if all(b[j] == 0 or j in comp for j in range(rs.rank))]
    for b in sub:
        if any(neg[j] < b[j] for j in range(rs.rank)):
            raise ValueError("-sigma(theta) is not the highest root of its "
                             "component of the orthogonal subsystem")
    return True


def dim_minimal_orbit(rs, component=0):
    """Dimension of the minimal nilpotent orbit: <theta^vee, 2 rho>."""
    theta = highest_roots(rs, component)[0]
    return int(pair_coweight(rs, coroot(rs, theta), two_rho(rs)))


def nilpotent_orbit_dimension(inv):
    """Dimension of the nilpotent orbit attached to the family, computed
    independently of kappa."""
    rs = inv.root_system
    if len(rs.components) == 2:
        return 2 * dim_minimal_orbit(rs, 0)
    theta = highest_roots(rs, 0)[0]
    img = sigma_root(inv, theta)
    if img == tuple(-x for x in theta):
        return dim_minimal_orbit(rs, 0)
    check_strong_orthogonality(inv)
    h = tuple(a - b for a, b in zip(coroot(rs, theta), coroot(rs, img)))
    g1 = g2 = 0
    for beta in root_set(rs):
        val = pair_coweight(rs, h, beta)
        if val == 1:
            g1 += 1
        elif val == 2:
            g2 += 1
    return g1 + 2 * g2


def dim_isotropy_complement(rrs):
    """Dimension of the -1 eigenspace: restricted rank plus half the
    number of moved roots."""
    moved = moved_root_count(rrs.involution)
    if moved % 2:
        raise ValueError("odd number of moved roots")
    return rrs.rank + moved // 2


def is_fano(rrs):
    """Fano unless the datum is split (no black nodes, no arrows) with
    restricted type not A or B."""
    sd = rrs.involution.satake
    split = not sd.black_nodes and all(
        sd.diagram_involution[i] == i for i in range(rrs.root_system.rank))
    letter = rrs.type_label.rstrip("0123456789")
    if letter == "BC" and split:
        raise ValueError("split datum with nonreduced restriction")
    return not (split and letter not in ("A", "B"))


@dataclass(frozen=True)
class VmrtReport:
    restricted_type: str
    rank: int
    sigma_theta_is_minus_theta: bool
    orbit_type: str
    boundary_degree: int
    dim_family: int
    dim_nilpotent_orbit: int
    dim_hc: int
    dim_p: int
    hermitian: bool
    exceptional: bool
    fano: bool
    picard_rank: int
    minimal_classes: tuple
    vmrt_components: tuple
    embedding_degree: str

    @property
    def n_families(self):
        return len(self.minimal_classes)


def vmrt_report(rrs, colors, hermitian, embedding_degree,
                hc_components, closed_orbit_name=None):
    """Assemble the report; hc_components is a list of (name, dim) pairs
    for the marked-diagram descriptors, closed_orbit_name the stored
    VMRT name used for restricted type A of rank >= 2."""
    inv = rrs.involution
    s, dim_family, dim_orbit, dim_hc = dimensions(rrs)
    oracle = nilpotent_orbit_dimension(inv)
    if oracle != dim_orbit:
        raise ValueError(f"nilpotent orbit dimension {dim_orbit} does not "
                         f"match the independent count {oracle}")
    exceptional = is_exceptional(rrs)[0]
    dim_p = dim_isotropy_complement(rrs)
    letter = rrs.type_label.rstrip("0123456789")

    if rrs.type_label == "A1":
        if dim_family != dim_p - 1:
            raise ValueError("rank-one family dimension mismatch")
        components = ((f"P{dim_p - 1}", dim_family),)
    elif letter == "A":
        if closed_orbit_name is None:
            raise ValueError("restricted type A needs a closed orbit name")
        components = ((closed_orbit_name, dim_family),)
    else:
        expected = 2 if hermitian and not exceptional else 1
        names = list(hc_components)
        if exceptional:
            deduped = []
            for item in names:
                if item not in deduped:
                    deduped.append(item)
            names = deduped
        if len(names) != expected:
            raise ValueError(f"expected {expected} VMRT components, "
                             f"got {len(names)}")
        for _, dim in names:
            if dim != dim_hc:
                raise ValueError("VMRT component dimension mismatch")
        components = tuple(names)

    return VmrtReport(
        restricted_type=rrs.type_label,
        rank=rrs.rank,
        sigma_theta_is_minus_theta=sigma_theta_is_minus_theta(inv),
        orbit_type=orbit_type(inv),
        boundary_degree=s,
        dim_family=dim_family,
        dim_nilpotent_orbit=dim_orbit,
        dim_hc=dim_hc,
        dim_p=dim_p,
        hermitian=hermitian,
        exceptional=exceptional,
        fano=is_fano(rrs),
        picard_rank=colors.picard_rank,
        minimal_classes=tuple(minimal_covering_classes(rrs, colors)),
        vmrt_components=components,
        embedding_degree=embedding_degree,
    )
