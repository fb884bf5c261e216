"""Deterministic LOCC transformations between sets of bipartite pure states.

The package checks the necessary conditions for ``{ψ_i} → {φ_i}`` (Nielsen
majorization per pair, non-increase of entanglement under every mixture, and
non-increase of distinguishability), labels the resulting region, and builds,
validates and simulates small LOCC protocol trees. A bundled fixture corpus
reproduces the worked examples as a regression suite.
"""

from __future__ import annotations

from ._version import __version__
from .conditions import ConditionReport, classify_region
from .configs import RunConfig, SamplerConfig, Tolerances
from .corpus import load_default_corpus, run_corpus
from .distinguishability import TriState, Verdict, class_distinguishable, locc_distinguishable
from .entanglement import majorization_check
from .protocols import (
    Protocol,
    apply_protocol,
    build_ip_protocol,
    product_kraus_feasibility,
    synthesize_nielsen_protocol,
    verify_set_transformation,
)
from .qstate import BipartitePureState, DensityOperator, Ensemble, SetPair, schmidt_decompose

__all__ = [
    "__version__",
    "BipartitePureState",
    "DensityOperator",
    "Ensemble",
    "SetPair",
    "schmidt_decompose",
    "majorization_check",
    "TriState",
    "Verdict",
    "locc_distinguishable",
    "class_distinguishable",
    "ConditionReport",
    "classify_region",
    "Protocol",
    "apply_protocol",
    "synthesize_nielsen_protocol",
    "build_ip_protocol",
    "verify_set_transformation",
    "product_kraus_feasibility",
    "RunConfig",
    "SamplerConfig",
    "Tolerances",
    "load_default_corpus",
    "run_corpus",
]
