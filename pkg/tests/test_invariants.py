"""Dimension formulas, orbit types and the report invariants."""

import pytest

from wonderful.curves import build_colors
from wonderful.invariants import (
    O_MIN,
    O_SUM,
    check_strong_orthogonality,
    dim_isotropy_complement,
    dim_minimal_orbit,
    dimensions,
    is_fano,
    kappa_and_sigma,
    nilpotent_orbit_dimension,
    orbit_type,
    sigma_theta_is_minus_theta,
    vmrt_report,
)
from wonderful.involution import build_involution, make_satake
from wonderful.restricted import build_restricted
from wonderful.rootsystem import build_root_system, pair_coweight, two_rho


def _setup(components, black=(), arrows=()):
    rs = build_root_system(components)
    inv = build_involution(make_satake(rs, black, arrows))
    return inv, build_restricted(inv)


def test_dim_minimal_orbit_values():
    # 2 h_vee - 2 for the adjoint algebra
    values = {("A", 3): 6, ("B", 2): 4, ("G", 2): 6, ("E", 8): 58,
              ("D", 5): 14, ("F", 4): 16, ("C", 3): 6, ("E", 6): 22}
    for comp, expect in values.items():
        assert dim_minimal_orbit(build_root_system((comp,))) == expect


def test_bdii_anchor():
    inv, rrs = _setup((("B", 2),), black=[1])
    kappa, sigma_sum = kappa_and_sigma(rrs)
    assert kappa == (3, 3)
    assert sigma_sum == (2, 2)
    assert dimensions(rrs) == (2, 3, 6, 2)
    assert sigma_theta_is_minus_theta(inv) is False
    assert orbit_type(inv) == O_SUM
    assert check_strong_orthogonality(inv)
    assert nilpotent_orbit_dimension(inv) == 6
    assert dim_isotropy_complement(rrs) == 4


def test_aiii_anchor():
    inv, rrs = _setup((("A", 3),), black=[1], arrows=[(0, 2)])
    kappa, _ = kappa_and_sigma(rrs)
    assert kappa == (3, 3, 3)
    assert dimensions(rrs) == (1, 2, 6, 2)
    assert orbit_type(inv) == O_MIN
    assert nilpotent_orbit_dimension(inv) == 6


def test_group_a1_anchor():
    inv, rrs = _setup((("A", 1), ("A", 1)), arrows=[(0, 1)])
    assert dimensions(rrs) == (2, 2, 4, 1)
    assert sigma_theta_is_minus_theta(inv) is True
    assert nilpotent_orbit_dimension(inv) == 4
    assert dim_isotropy_complement(rrs) == 3


def test_kappa_identity_when_theta_not_real():
    for spec in [((("B", 2),), [1], ()),
                 ((("A", 5),), [0, 2, 4], ()),
                 ((("F", 4),), [0, 1, 2], ()),
                 ((("C", 5),), [0, 2, 4], ())]:
        inv, rrs = _setup(*spec)
        assert not sigma_theta_is_minus_theta(inv)
        rs = rrs.root_system
        kappa, _ = kappa_and_sigma(rrs)
        eta = rrs.theta_bar_covector
        assert pair_coweight(rs, eta, kappa) == pair_coweight(rs, eta, two_rho(rs))


def test_fano_rule():
    split_c = _setup((("C", 3),))[1]
    assert not is_fano(split_c)
    split_a = _setup((("A", 3),))[1]
    assert is_fano(split_a)
    split_b = _setup((("B", 3),))[1]
    assert is_fano(split_b)
    split_g = _setup((("G", 2),))[1]
    assert not is_fano(split_g)
    quadric = _setup((("B", 3),), black=[1, 2])[1]
    assert is_fano(quadric)
    eii = _setup((("E", 6),), arrows=[(0, 5), (2, 4)])[1]
    assert is_fano(eii)


def test_dimension_identity_family_hc():
    for spec in [((("B", 2),), [1], ()),
                 ((("A", 3),), [1], [(0, 2)]),
                 ((("E", 6),), [2, 3, 4], [(0, 5)]),
                 ((("D", 5),), [2, 3, 4], ()),
                 ((("F", 4),), (), ())]:
        inv, rrs = _setup(*spec)
        s, dim_family, dim_orbit, dim_hc = dimensions(rrs)
        assert dim_family == dim_hc + s - 1
        assert dim_orbit == 2 * (dim_hc + 1)
        assert dim_orbit % 2 == 0


def test_report_rank_one():
    inv, rrs = _setup((("B", 2),), black=[1])
    report = vmrt_report(rrs, build_colors(inv), hermitian=False,
                         embedding_degree="O(1)", hc_components=[("Q1", 2)])
    assert report.restricted_type == "A1"
    assert report.vmrt_components == (("P3", 3),)
    assert report.n_families == 1
    assert report.fano
    assert report.dim_p == 4


def test_report_bc_type_uses_hc():
    inv, rrs = _setup((("A", 3),), black=[1], arrows=[(0, 2)])
    report = vmrt_report(rrs, build_colors(inv), hermitian=True,
                         embedding_degree="O(1,1)",
                         hc_components=[("P2", 2), ("P2", 2)])
    assert report.exceptional
    assert report.vmrt_components == (("P2", 2),)
    assert report.n_families == 2
    assert report.picard_rank == 2


def test_report_rejects_bad_orbit_dimension():
    inv, rrs = _setup((("A", 3),), black=[1], arrows=[(0, 2)])
    with pytest.raises(ValueError):
        vmrt_report(rrs, build_colors(inv), hermitian=True,
                    embedding_degree="O(1,1)",
                    hc_components=[("P2", 5), ("P2", 5)])
