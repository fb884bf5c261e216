"""Necessary-condition checks, pairwise baselines and region classification."""

from __future__ import annotations

from ..qstate import SetPair
from .baselines import (
    FidelityWitness,
    Lemma1Result,
    Lemma3Result,
    lemma1_check,
    lemma2_pair_feasible,
    lemma3_qubit_check,
)
from .checks import (
    ConditionAResult,
    ConditionBResult,
    ConditionBWitness,
    ConditionCResult,
    EntropyConditionResult,
    condition_a_check,
    condition_b_check,
    condition_c_check,
    entropy_condition_check,
)
from .region import ConditionReport, classify_region, region_label
from .simplex import SimplexPoint, grid_size, interior_grid, random_interior, simplex_grid

__all__ = [
    "ConditionAResult",
    "ConditionBResult",
    "ConditionBWitness",
    "ConditionCResult",
    "ConditionReport",
    "EntropyConditionResult",
    "FidelityWitness",
    "Lemma1Result",
    "Lemma3Result",
    "SetPair",
    "SimplexPoint",
    "classify_region",
    "condition_a_check",
    "condition_b_check",
    "condition_c_check",
    "entropy_condition_check",
    "grid_size",
    "interior_grid",
    "lemma1_check",
    "lemma2_pair_feasible",
    "lemma3_qubit_check",
    "random_interior",
    "region_label",
    "simplex_grid",
]
