"""Exact classification of minimal rational curves on wonderful
compactifications of adjoint symmetric spaces."""

__version__ = "0.1.0"

from .catalog import (
    build_report,
    enumerate_records,
    instantiate,
    load_catalog,
    validate,
)
from .curves import build_colors, minimal_covering_classes
from .invariants import dimensions, vmrt_report
from .involution import build_involution, make_satake
from .restricted import build_restricted
from .rootsystem import build_root_system

__all__ = [
    "build_colors",
    "build_involution",
    "build_report",
    "build_restricted",
    "build_root_system",
    "dimensions",
    "enumerate_records",
    "instantiate",
    "load_catalog",
    "make_satake",
    "minimal_covering_classes",
    "validate",
    "vmrt_report",
]
