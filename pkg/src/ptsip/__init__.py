"""Semiclassical quantization of primary shape-invariant potentials.

Compares the supersymmetric WKB condition with the proper quantization
rule on the full catalog of primary translationally shape-invariant
potentials, with a Numerov shooting solver as an independent check.
Units are ``hbar = 2m = 1`` throughout.
"""

from .catalog import (
    CATALOG,
    REFERENCE_PARAMS,
    UNBOUNDED,
    Category,
    MapSign,
    PotentialId,
    PotentialSpec,
    canonical_form,
    closed_form_level,
    level_count,
    reference_spec,
)
from .errors import PtsipError

__version__ = "0.1.0"

__all__ = [
    "CATALOG",
    "REFERENCE_PARAMS",
    "UNBOUNDED",
    "Category",
    "MapSign",
    "PotentialId",
    "PotentialSpec",
    "PtsipError",
    "canonical_form",
    "closed_form_level",
    "level_count",
    "reference_spec",
]
