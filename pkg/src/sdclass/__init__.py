"""Isomorph-free classification of binary self-dual codes."""
from __future__ import annotations

from .augment import SearchNode, SearchStats, augment, extend, parent, partition_run
from .canonical import are_equivalent, automorphism_group, canonical_form, canonical_outcome
from .code import SelfDualCode
from .db import ClassDatabase, ClassRecord
from .gf2 import BitMatrix, BitVector
from .groups import AutomorphismGroup, CoordPermutation
from .verify import mass_check, thompson_check, total_count

__version__ = "0.1.0"

__all__ = [
    "AutomorphismGroup",
    "BitMatrix",
    "BitVector",
    "ClassDatabase",
    "ClassRecord",
    "CoordPermutation",
    "SearchNode",
    "SearchStats",
    "SelfDualCode",
    "are_equivalent",
    "augment",
    "automorphism_group",
    "canonical_form",
    "canonical_outcome",
    "extend",
    "mass_check",
    "parent",
    "partition_run",
    "thompson_check",
    "total_count",
]
