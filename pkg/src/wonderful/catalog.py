"""Family catalog: load templates, instantiate records, validate, enumerate.

The data file stores, per family, the Satake data generator, the Kac
diagram builder, and the expected classification columns.  Everything
derivable is recomputed by the engine and compared against the stored
columns by validate(); stored data never feeds back into computations.
"""

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from math import gcd

import yaml

from .curves import build_colors, minimal_covering_classes, pushforward_class
from .invariants import (
    check_strong_orthogonality,
    dimensions,
    is_fano,
    nilpotent_orbit_dimension,
    sigma_theta_is_minus_theta,
    vmrt_report,
)
from .involution import build_involution, is_inner, make_satake, sigma_root
from .kac import (
    KAC_BUILDERS,
    marked_diagrams,
    name_dimension,
    normalize_name,
    validate_diagram,
)
from .restricted import build_restricted, is_exceptional
from .rootsystem import (
    build_root_system,
    coroot,
    highest_roots,
    pair_coweight,
    two_rho,
)

_ENV_BASE = {"range": range, "list": list, "len": len}
_BRACE = re.compile(r"\{([^{}]+)\}")

# low-rank type coincidences used when comparing type labels
_TYPE_ALIASES = {"B1": "A1", "C1": "A1", "BC0": "A1", "C2": "B2", "D3": "A3"}


def _eval(expr, env):
    scope = {"__builtins__": {}}
    scope.update(_ENV_BASE)
    scope.update(env)
    return eval(compile(expr, "<catalog>", "eval"), scope)


def _fmt(template, env):
    return _BRACE.sub(lambda m: str(_eval(m.group(1), env)), template)


def _norm_type(label):
    return _TYPE_ALIASES.get(label, label)


@dataclass(frozen=True)
class FamilyTemplate:
    label: str
    params: tuple
    constraints: tuple
    data: dict


@dataclass(frozen=True)
class StoredColumns:
    gh: str
    restricted_type: str
    hc: tuple
    vmrt: tuple
    emb: tuple
    sigma_theta: bool
    hermitian: object
    fano: bool


@dataclass(frozen=True)
class SymmetricSpaceRecord:
    label: str
    params: dict
    involution: object
    restricted: object
    kac: object
    stored: StoredColumns

    @property
    def root_system(self):
        return self.involution.root_system

    @property
    def ambient_rank(self):
        return self.root_system.rank


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


class Catalog:
    def __init__(self, version, templates):
        self.version = version
        self.templates = tuple(templates)
        self.by_label = {t.label: t for t in templates}
        if len(self.by_label) != len(self.templates):
            raise ValueError("duplicate family labels in catalog data")


def load_catalog(path=None):
    if path is None:
        text = (resources.files("wonderful") / "data" / "catalog.yaml") \
            .read_text(encoding="utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    raw = yaml.safe_load(text)
    templates = []
    for entry in raw["families"]:
        templates.append(FamilyTemplate(
            label=entry["label"],
            params=tuple(entry.get("params") or ()),
            constraints=tuple(entry.get("constraints") or ()),
            data=entry,
        ))
    return Catalog(raw["version"], templates)


def _route(label, params):
    """Send parameter values that belong to a sibling Table row there."""
    if label == "GroupA" and params.get("r") == 1:
        return "GroupA1", {}
    if label == "AI" and params.get("r") == 1:
        return "AI1", {}
    if label == "AIII" and params.get("n") == 2 * params.get("r", 0):
        return "AIIIeq", {"r": params["r"]}
    if label == "BDI" and params.get("r") == 2:
        return "BDI2", {"n": params["n"]}
    if label == "BDI" and params.get("r") == 1:
        return "BDII", {"n": params["n"]}
    if label == "CII" and params.get("n") == 2 * params.get("r", 0):
        return "CIIeq", {"r": params["r"]}
    return label, params


def instantiate(catalog, label, params=None):
    params = dict(params or {})
    template = catalog.by_label.get(label)
    if template is None:
        raise ValueError(f"unknown family {label!r}")
    if set(params) != set(template.params):
        raise ValueError(
            f"family {label} takes parameters {list(template.params)}, "
            f"got {sorted(params)}")
    for name, value in params.items():
        if not isinstance(value, int):
            raise ValueError(f"parameter {name} must be an integer")
    label, params = _route(label, params)
    template = catalog.by_label[label]
    for cond in template.constraints:
        if not _eval(cond, params):
            raise ValueError(
                f"family {label}: condition {cond!r} fails for {params}")
    params = {k: params[k] for k in template.params}
    data = template.data
    ambient = tuple((str(t), int(n)) for t, n in _eval(data["ambient"], params))
    rs = build_root_system(ambient)
    black = tuple(sorted(int(b) - 1 for b in _eval(data["black"], params)))
    arrows = tuple((int(i) - 1, int(j) - 1)
                   for i, j in _eval(data["arrows"], params))
    inv = build_involution(make_satake(rs, black, arrows))
    rrs = build_restricted(inv)
    kac_env = dict(params)
    kac_env.update(KAC_BUILDERS)
    kd = _eval(data["kac"], kac_env)
    hc = tuple(_fmt(x, params) for x in data["hc"])
    vmrt = tuple(_fmt(x, params) for x in data.get("vmrt") or data["hc"])
    stored = StoredColumns(
        gh=_fmt(data["gh"], params),
        restricted_type=_fmt(data["restricted"], params),
        hc=hc,
        vmrt=vmrt,
        emb=tuple(data["emb"]),
        sigma_theta=bool(data["sigma_theta"]),
        hermitian=data.get("hermitian"),
        fano=bool(data["fano"]),
    )
    return SymmetricSpaceRecord(label, params, inv, rrs, kd, stored)


def build_report(record):
    """VmrtReport for a record, assembled from all engine layers."""
    rrs = record.restricted
    colors = build_colors(record.involution)
    descs = marked_diagrams(record.kac)
    stored = record.stored
    closed = stored.vmrt[0] if len(stored.vmrt) == 1 else None
    return vmrt_report(
        rrs, colors,
        hermitian=stored.hermitian is not None,
        embedding_degree=stored.emb,
        hc_components=tuple((d.name, d.dim) for d in descs),
        closed_orbit_name=closed,
    )


ALL_CHECKS = (
    "restricted-type",
    "exceptional-flag",
    "sigma-theta",
    "fano",
    "boundary-degree",
    "picard-rank",
    "dim-identities",
    "nilpotent-oracle",
    "strong-orthogonality",
    "theta-bar",
    "primitivity",
    "minimal-classes",
    "pushforward",
    "kappa-identity",
    "kac-affine",
    "kac-white-count",
    "kac-descriptors",
    "vmrt-components",
    "emb-structure",
    "hc-vmrt-coherence",
)


def validate(record):
    """Run every consistency check; returns the failures (empty = pass)."""
    inv = record.involution
    rrs = record.restricted
    rs = inv.root_system
    stored = record.stored
    cache = {}

    def colors():
        if "colors" not in cache:
            cache["colors"] = build_colors(inv)
        return cache["colors"]

    def dims():
        if "dims" not in cache:
            cache["dims"] = dimensions(rrs)
        return cache["dims"]

    def exceptional():
        return is_exceptional(rrs)[0]

    def check_restricted_type():
        got, want = _norm_type(rrs.type_label), _norm_type(stored.restricted_type)
        if got != want:
            raise ValueError(f"computed {rrs.type_label}, stored "
                             f"{stored.restricted_type}")

    def check_exceptional_flag():
        want = stored.hermitian == "e"
        if exceptional() != want:
            raise ValueError(f"computed exceptional={exceptional()}, "
                             f"stored Herm/Exc implies {want}")

    def check_sigma_theta():
        got = sigma_theta_is_minus_theta(inv)
        if got != stored.sigma_theta:
            raise ValueError(f"computed {got}, stored {stored.sigma_theta}")

    def check_fano():
        got = is_fano(rrs)
        if got != stored.fano:
            raise ValueError(f"computed {got}, stored {stored.fano}")

    def check_boundary_degree():
        s = dims()[0]
        letter = _norm_type(rrs.type_label).rstrip("0123456789")
        if (s == 2) != (letter == "A"):
            raise ValueError(f"boundary degree {s} vs restricted letter "
                             f"{letter}")

    def check_picard_rank():
        want = rrs.rank + (1 if exceptional() else 0)
        got = colors().picard_rank
        if got != want or len(colors().colors) != want:
            raise ValueError(f"Picard rank {got}, expected {want}")

    def check_dim_identities():
        s, dim_family, dim_orbit, dim_hc = dims()
        if dim_family != dim_hc + s - 1:
            raise ValueError("dim_family != dim_hc + boundary_degree - 1")
        if dim_orbit != 2 * (dim_hc + 1) or dim_orbit % 2:
            raise ValueError("orbit dimension identity fails")

    def check_nilpotent_oracle():
        want = nilpotent_orbit_dimension(inv)
        if dims()[2] != want:
            raise ValueError(f"2<theta_bar_covector, kappa> = {dims()[2]} "
                             f"but independent count = {want}")

    def check_strong_orth():
        theta = highest_roots(rs, 0)[0]
        if sigma_root(inv, theta) == tuple(-x for x in theta):
            return
        check_strong_orthogonality(inv)

    def check_theta_bar():
        theta = highest_roots(rs, 0)[0]
        image = sigma_root(inv, theta)
        tbc = tuple(Fraction(x) for x in rrs.theta_bar_covector)
        if image == tuple(-x for x in theta):
            want = tuple(Fraction(x, 2) for x in coroot(rs, theta))
        else:
            half = [Fraction(a - b, 2) for a, b in
                    zip(coroot(rs, theta), coroot(rs, image))]
            want = tuple(half)
        if tbc != want:
            raise ValueError("theta_bar covector inconsistent with the "
                             "ambient highest root")

    def check_primitivity():
        if _norm_type(rrs.type_label) == "A1":
            return
        doubled = [2 * Fraction(x) for x in rrs.theta_bar_covector]
        if any(x.denominator != 1 for x in doubled):
            raise ValueError("2 theta_bar_covector is not integral")
        if gcd(*(abs(int(x)) for x in doubled)) != 1:
            raise ValueError("2 theta_bar_covector is divisible")
        pair_one = any(
            pair_coweight(rs, rrs.theta_bar_covector, a) == 1
            for a in rrs.restricted_simple)
        if not pair_one:
            raise ValueError("no simple restricted root pairs to 1")

    def check_minimal_classes():
        classes = minimal_covering_classes(rrs, colors())
        if exceptional():
            if len(classes) != 2:
                raise ValueError(f"{len(classes)} classes, expected 2")
            _, (i, j) = is_exceptional(rrs)
            members = [c for c in colors().colors]
            idx_i = members.index((i,))
            idx_j = members.index((j,))
            pattern = {(c[idx_i], c[idx_j]) for c in classes}
            if pattern != {(1, 0), (0, 1)}:
                raise ValueError("exceptional classes lack the (1,0)/(0,1) "
                                 "pattern")
        elif len(classes) != 1:
            raise ValueError(f"{len(classes)} classes, expected 1")

    def check_pushforward():
        pushforward_class(rrs, colors())

    def check_kappa_identity():
        if sigma_theta_is_minus_theta(inv):
            return
        t = pair_coweight(rs, rrs.theta_bar_covector,
                          [x for x in two_rho(rs)])
        if 2 * t != dims()[2]:
            raise ValueError("<theta_bar_covector, kappa> != "
                             "<theta_bar_covector, 2 rho>")

    def check_kac_affine():
        validate_diagram(record.kac, is_inner(inv))

    def check_kac_white_count():
        want = 2 if stored.hermitian is not None else 1
        if len(record.kac.whites) != want:
            raise ValueError(f"{len(record.kac.whites)} white nodes, "
                             f"expected {want}")

    def check_kac_descriptors():
        descs = marked_diagrams(record.kac)
        dim_hc = dims()[3]
        for d in descs:
            if d.dim != dim_hc:
                raise ValueError(f"descriptor {d.name} has dimension "
                                 f"{d.dim}, expected {dim_hc}")
        got = [normalize_name(d.name) for d in descs]
        want = [normalize_name(x) for x in stored.hc]
        if len(got) == len(want):
            if sorted(got) != sorted(want):
                raise ValueError(f"descriptors {got} vs stored {want}")
        elif stored.hermitian == "e" and len(want) == 1 and len(got) == 2:
            if got[0] != got[1] or got[0] != want[0]:
                raise ValueError(f"descriptors {got} vs stored {want}")
        else:
            raise ValueError(f"{len(got)} descriptors vs {len(want)} "
                             f"stored names")

    def check_vmrt_components():
        rep = build_report(record)
        got = sorted((normalize_name(n), d) for n, d in rep.vmrt_components)
        want = sorted((normalize_name(n), name_dimension(n))
                      for n in stored.vmrt)
        if got != want:
            raise ValueError(f"VMRT components {got} vs stored {want}")

    def check_emb_structure():
        for name in stored.vmrt:
            if name.count(" x ") + 1 != len(stored.emb):
                raise ValueError(f"embedding degree {stored.emb} does not "
                                 f"match factors of {name!r}")

    def check_hc_vmrt_coherence():
        letter = _norm_type(rrs.type_label).rstrip("0123456789")
        if letter != "A" and stored.vmrt != stored.hc:
            raise ValueError("stored VMRT differs from stored closed orbit "
                             "for a non-A restricted type")

    bodies = {
        "restricted-type": check_restricted_type,
        "exceptional-flag": check_exceptional_flag,
        "sigma-theta": check_sigma_theta,
        "fano": check_fano,
        "boundary-degree": check_boundary_degree,
        "picard-rank": check_picard_rank,
        "dim-identities": check_dim_identities,
        "nilpotent-oracle": check_nilpotent_oracle,
        "strong-orthogonality": check_strong_orth,
        "theta-bar": check_theta_bar,
        "primitivity": check_primitivity,
        "minimal-classes": check_minimal_classes,
        "pushforward": check_pushforward,
        "kappa-identity": check_kappa_identity,
        "kac-affine": check_kac_affine,
        "kac-white-count": check_kac_white_count,
        "kac-descriptors": check_kac_descriptors,
        "vmrt-components": check_vmrt_components,
        "emb-structure": check_emb_structure,
        "hc-vmrt-coherence": check_hc_vmrt_coherence,
    }
    failures = []
    for name in ALL_CHECKS:
        try:
            bodies[name]()
        except Exception as exc:
            failures.append(CheckResult(name, False, str(exc)))
    return failures


def enumerate_records(catalog, max_rank):
    """All instances with ambient rank <= max_rank, in catalog order."""
    if max_rank < 2:
        raise ValueError("max_rank must be at least 2")
    out = []
    hi = 2 * max_rank + 2
    for template in catalog.templates:
        for values in itertools.product(range(1, hi), repeat=len(template.params)):
            params = dict(zip(template.params, values))
            if _route(template.label, params)[0] != template.label:
                continue
            if not all(_eval(c, params) for c in template.constraints):
                continue
            ambient = _eval(template.data["ambient"], params)
            if sum(n for _, n in ambient) > max_rank:
                continue
            out.append(instantiate(catalog, template.label, params))
    return out
