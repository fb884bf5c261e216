"""Tri-state perfect-discrimination verdicts and the known-fact table."""

from __future__ import annotations

from .known_facts import (
    CLASSES,
    KnownFact,
    KnownFactTable,
    class_distinguishable,
    default_known_facts,
    load_known_facts,
    parse_known_facts,
    validate_monotone,
)
from .rules import (
    contains_set,
    find_computational_grouping,
    is_computational_product,
    is_product,
    locc_distinguishable,
    pairwise_orthogonal,
)
from .separation import class_transformable, separation_pair
from .types import TriState, Verdict

__all__ = [
    "CLASSES",
    "KnownFact",
    "KnownFactTable",
    "TriState",
    "Verdict",
    "class_distinguishable",
    "class_transformable",
    "contains_set",
    "default_known_facts",
    "find_computational_grouping",
    "is_computational_product",
    "is_product",
    "load_known_facts",
    "locc_distinguishable",
    "pairwise_orthogonal",
    "parse_known_facts",
    "separation_pair",
    "validate_monotone",
]
