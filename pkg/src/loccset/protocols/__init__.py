"""LOCC protocol trees: validation, simulation, synthesis and obstructions."""

from __future__ import annotations

from .distill import (
    EnsembleBranch,
    apply_protocol_to_ensemble,
    distilled_ebits,
    subspace_split_protocol,
)
from .io import dump_protocol, load_protocol, parse_protocol, protocol_to_json
from .ip import build_ip_protocol, check_partition
from .nielsen import synthesize_nielsen_protocol, t_transform_chain
from .obstruction import (
    FeasibilityVerdict,
    KrausWitness,
    is_supported_form,
    product_kraus_feasibility,
)
from .simulate import (
    ProtocolValidation,
    TransformationCheck,
    apply_protocol,
    check_set_transformation,
    require_valid,
    validate_protocol,
    verify_set_transformation,
)
from .types import BranchOutcome, Leaf, ProductKraus, Protocol, ProtocolNode

__all__ = [
    "BranchOutcome",
    "EnsembleBranch",
    "FeasibilityVerdict",
    "KrausWitness",
    "Leaf",
    "ProductKraus",
    "Protocol",
    "ProtocolNode",
    "ProtocolValidation",
    "TransformationCheck",
    "apply_protocol",
    "apply_protocol_to_ensemble",
    "build_ip_protocol",
    "check_partition",
    "check_set_transformation",
    "distilled_ebits",
    "dump_protocol",
    "is_supported_form",
    "load_protocol",
    "parse_protocol",
    "product_kraus_feasibility",
    "protocol_to_json",
    "require_valid",
    "subspace_split_protocol",
    "synthesize_nielsen_protocol",
    "t_transform_chain",
    "validate_protocol",
    "verify_set_transformation",
]
