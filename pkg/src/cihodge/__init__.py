"""Hodge diamonds of complete intersections from linear-section data."""

from .engine import Engine, SplitPlan, assemble_amhs, compute_diamond, middle_hodge, prim_middle
from .hodge import EMPTY, BigradedDims, HodgeDiamond, WeightGradedMHS, graded_F_dims, tate_twist
from .variety import CISpec, CustomAmbient, MemoStore, ProjectiveSpace

__all__ = [
    "EMPTY",
    "BigradedDims",
    "CISpec",
    "CustomAmbient",
    "Engine",
    "HodgeDiamond",
    "MemoStore",
    "ProjectiveSpace",
    "SplitPlan",
    "WeightGradedMHS",
    "assemble_amhs",
    "compute_diamond",
    "graded_F_dims",
    "middle_hodge",
    "prim_middle",
    "tate_twist",
]
