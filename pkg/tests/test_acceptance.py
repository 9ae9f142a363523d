"""End-to-end acceptance suite.

Recomputes the whole built-in table from involution data alone and
cross-checks every stored column, then verifies the dimension and
curve-class identities instance by instance, pins three hand-verified
anchors, and proves the validator actually catches corrupted fixtures.
"""

import dataclasses
import time
from fractions import Fraction
from math import gcd

import yaml
from importlib import resources

from wonderful.catalog import (
    ALL_CHECKS,
    enumerate_records,
    instantiate,
    load_catalog,
    validate,
)
from wonderful.cli import main
from wonderful.curves import (
    boundary_pairing,
    build_colors,
    minimal_covering_classes,
    psi,
    pushforward_class,
)
from wonderful.invariants import (
    check_strong_orthogonality,
    dimensions,
    kappa_and_sigma,
    nilpotent_orbit_dimension,
)
from wonderful.involution import NONREDUCED, classify_simple, sigma_root
from wonderful.restricted import expand, is_exceptional
from wonderful.rootsystem import (
    coroot,
    highest_roots,
    longest_subsystem_word,
    pair_coweight,
    root_set,
    two_rho,
    word_matrix,
)

CAT = load_catalog()

EXPECTED_LABELS = {
    "GroupA", "GroupA1", "GroupB", "GroupC", "GroupD", "GroupF4", "GroupG2",
    "AI", "AI1", "AII", "AIII", "AIIIeq", "BDI", "BDI2", "BDII",
    "CI", "CII", "CIIeq", "DI", "DIIIeven", "DIIIodd",
    "EI", "EII", "EIII", "EIV", "EV", "EVI", "EVII", "EVIII", "EIX",
    "FI", "FII", "G",
}

_CACHE = {}


def _all_records():
    if "records" not in _CACHE:
        _CACHE["records"] = enumerate_records(CAT, 8)
    return _CACHE["records"]


def test_catalog_check_complete_clean_and_fast():
    started = time.monotonic()
    catalog = load_catalog()
    records = enumerate_records(catalog, 8)
    failures = []
    for record in records:
        for failure in validate(record):
            failures.append((record.label, record.params, failure.name,
                             failure.detail))
    elapsed = time.monotonic() - started
    assert failures == []
    assert len(records) >= 60
    assert {r.label for r in records} == EXPECTED_LABELS
    assert elapsed < 60.0
    _CACHE["records"] = records


def test_dimension_identities():
    for record in _all_records():
        rrs = record.restricted
        rs = rrs.root_system
        tbc = rrs.theta_bar_covector
        kappa, sigma_sum = kappa_and_sigma(rrs)
        t = pair_coweight(rs, tbc, kappa)
        s = pair_coweight(rs, tbc, sigma_sum)
        assert s in (1, 2), record.label
        dims = dimensions(rrs)
        assert dims == (s, t + s - 2, 2 * t, t - 1), record.label
        boundary, dim_family, dim_orbit, dim_hc = dims
        assert dim_family == dim_hc + boundary - 1, record.label
        assert dim_orbit % 2 == 0, record.label


def test_nilpotent_orbit_oracle():
    branches = {True: 0, False: 0}
    for record in _all_records():
        inv = record.involution
        rs = inv.root_system
        dim_orbit = dimensions(record.restricted)[2]
        assert dim_orbit == nilpotent_orbit_dimension(inv), record.label
        theta = highest_roots(rs, 0)[0]
        image = sigma_root(inv, theta)
        fixed = image == tuple(-x for x in theta)
        branches[fixed] += 1
        if fixed:
            minimal = pair_coweight(rs, coroot(rs, theta), two_rho(rs))
            assert dim_orbit == minimal, record.label
        else:
            eta = tuple(a - b for a, b in
                        zip(coroot(rs, theta), coroot(rs, image)))
            one = two = 0
            for beta in root_set(rs):
                p = pair_coweight(rs, eta, beta)
                if p == 1:
                    one += 1
                elif p == 2:
                    two += 1
            assert dim_orbit == one + 2 * two, record.label
    assert branches[True] > 0 and branches[False] > 0


def _matmul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n))
                       for j in range(n)) for i in range(n))


def test_restricted_root_suite():
    for record in _all_records():
        rrs = record.restricted
        inv = record.involution
        rs = rrs.root_system
        label = record.label

        # the highest restricted root dominates every restricted root
        basis = rrs.restricted_simple
        top = expand(basis, rrs.theta_bar)
        assert top is not None and all(c >= 0 and c.denominator == 1
                                       for c in top), label
        positives = set(rrs.restricted_positive)
        for beta in positives:
            if beta == rrs.theta_bar:
                continue
            coeffs = expand(basis, beta)
            assert coeffs is not None, label
            assert all(c.denominator == 1 and c >= 0 for c in coeffs), label
            assert all(a >= b for a, b in zip(top, coeffs)), label

        # the involution commutes with the longest Weyl element
        w0 = word_matrix(rs, longest_subsystem_word(rs, range(rs.rank)))
        sig = inv.sigma_matrix
        assert _matmul(w0, sig) == _matmul(sig, w0), label

        # restricted Cartan matrix is a genuine Cartan matrix
        for i in range(rrs.rank):
            assert rrs.cartan[i][i] == 2, label

        # nonreduced exactly when some white pair gives pairing one
        has_pair_one = any(classify_simple(inv, i) == NONREDUCED
                           for i in inv.delta1)
        assert rrs.nonreduced == has_pair_one, label
        assert rrs.type_label.startswith("BC") == rrs.nonreduced, label

        # at most one doubled simple restricted root
        doubled = [i for i, a in enumerate(basis)
                   if tuple(2 * x for x in a) in positives]
        assert len(doubled) <= 1, label
        assert (len(doubled) == 1) == (rrs.doubled_index is not None), label

        # exceptional = simply laced ambient type and nonreduced restriction
        simply_laced = all(t in "ADE" for t, _ in rs.components)
        assert is_exceptional(rrs)[0] == (simply_laced and rrs.nonreduced), \
            label

        # strong orthogonality of the highest root and its image
        theta = highest_roots(rs, 0)[0]
        if sigma_root(inv, theta) != tuple(-x for x in theta):
            check_strong_orthogonality(inv)

        # primitivity of the doubled covector above rank-one type A
        if rrs.type_label not in ("A1", "B1", "C1"):
            doubled_cov = [2 * Fraction(x) for x in rrs.theta_bar_covector]
            assert all(x.denominator == 1 for x in doubled_cov), label
            assert gcd(*(abs(int(x)) for x in doubled_cov)) == 1, label
            assert any(pair_coweight(rs, rrs.theta_bar_covector, a) == 1
                       for a in basis), label


def test_curve_class_suite():
    for record in _all_records():
        rrs = record.restricted
        label = record.label
        colors = build_colors(record.involution)
        classes = minimal_covering_classes(rrs, colors)
        for gamma in classes:
            assert all(isinstance(c, int) and c >= 0 for c in gamma), label
            assert psi(rrs, colors, gamma) == rrs.theta_bar_covector, label
        matrix = boundary_pairing(rrs, colors)
        assert all(isinstance(v, int) for row in matrix for v in row), label
        push = pushforward_class(rrs, colors)
        exceptional, witness = is_exceptional(rrs)
        if exceptional:
            assert len(classes) == 2, label
            assert push == tuple(a + b for a, b in zip(*classes)), label
            i, j = witness
            ci = colors.colors.index((i,))
            cj = colors.colors.index((j,))
            pattern = {(g[ci], g[cj]) for g in classes}
            assert pattern == {(1, 0), (0, 1)}, label
        else:
            assert len(classes) == 1, label
            assert push == tuple(2 * c for c in classes[0]), label


def test_anchor_rank_one_quadric():
    record = instantiate(CAT, "BDII", {"n": 5})
    assert dimensions(record.restricted) == (2, 3, 6, 2)


def test_anchor_projective_space():
    record = instantiate(CAT, "AIII", {"n": 4, "r": 1})
    assert dimensions(record.restricted) == (1, 2, 6, 2)
    colors = build_colors(record.involution)
    assert len(minimal_covering_classes(record.restricted, colors)) == 2


def test_anchor_rank_one_group():
    record = instantiate(CAT, "GroupA1", {})
    assert dimensions(record.restricted) == (2, 2, 4, 1)
    assert build_colors(record.involution).picard_rank == 1


def test_negative_control_satake_bit():
    from wonderful.involution import build_involution, make_satake
    from wonderful.restricted import build_restricted

    record = instantiate(CAT, "BDI", {"n": 9, "r": 3})
    assert record.involution.satake.black_nodes == (3,)
    corrupted = build_involution(make_satake(record.root_system, (), ()))
    tampered = dataclasses.replace(
        record, involution=corrupted, restricted=build_restricted(corrupted))
    names = {f.name for f in validate(tampered)}
    assert "restricted-type" in names


def test_negative_control_kac_color():
    record = instantiate(CAT, "FII", {})
    kd = record.kac
    flip = kd.blacks[0]
    colors = tuple("w" if k == flip else c for k, c in enumerate(kd.colors))
    tampered = dataclasses.replace(
        record, kac=dataclasses.replace(kd, colors=colors))
    names = {f.name for f in validate(tampered)}
    assert names & {"kac-affine", "kac-white-count", "kac-descriptors"}


def _load_raw_catalog():
    text = (resources.files("wonderful") / "data" / "catalog.yaml") \
        .read_text(encoding="utf-8")
    return yaml.safe_load(text)


def test_negative_control_cli_satake_fixture(tmp_path, capsys):
    raw = _load_raw_catalog()
    for fam in raw["families"]:
        if fam["label"] == "AIII":
            fam["black"] = "list(range(r + 2, n - r))"
    path = tmp_path / "corrupt_satake.yaml"
    path.write_text(yaml.safe_dump(raw))
    code = main(["check", "--max-rank", "3", "--catalog", str(path)])
    out = capsys.readouterr().out
    assert code == 1
    assert "restricted-type" in out


def test_negative_control_cli_kac_fixture(tmp_path, capsys):
    raw = _load_raw_catalog()
    for fam in raw["families"]:
        if fam["label"] == "BDII":
            fam["kac"] = "kac_sym2(2)"
    path = tmp_path / "corrupt_kac.yaml"
    path.write_text(yaml.safe_dump(raw))
    code = main(["check", "--max-rank", "3", "--catalog", str(path)])
    out = capsys.readouterr().out
    assert code == 1
    assert "kac-" in out


def test_cli_check_clean(capsys):
    code = main(["check", "--max-rank", "3"])
    out = capsys.readouterr().out
    assert code == 0
    assert "all checks passed" in out
    for name in ALL_CHECKS:
        assert name in out
