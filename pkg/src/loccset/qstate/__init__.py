"""States, density operators and the linear algebra on them."""

from __future__ import annotations

from .ops import (
    ensemble_density,
    fidelity_mixed,
    fidelity_pure,
    partial_trace,
    partial_transpose,
    psd_sqrt,
    trace_norm,
)
from .pair import SetPair
from .schmidt import local_schmidt_bases, schmidt_decompose, squared_schmidt_coefficients
from .types import (
    BipartitePureState,
    DensityOperator,
    Ensemble,
    SchmidtDecomposition,
    apply_product,
)

__all__ = [
    "BipartitePureState",
    "DensityOperator",
    "Ensemble",
    "SchmidtDecomposition",
    "SetPair",
    "apply_product",
    "ensemble_density",
    "fidelity_mixed",
    "fidelity_pure",
    "local_schmidt_bases",
    "partial_trace",
    "partial_transpose",
    "psd_sqrt",
    "schmidt_decompose",
    "squared_schmidt_coefficients",
    "trace_norm",
]
