"""Protocol validation and simulation on pure states."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from ..configs import DEFAULT_TOLERANCES
from ..errors import DimensionMismatchError, NormalizationError, ProtocolStructureError
from ..qstate import BipartitePureState, SetPair, fidelity_pure
from .types import BranchOutcome, Leaf, Protocol, ProtocolNode, path_name, walk

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class ProtocolValidation:
    """``defects`` maps each node path (``root``, ``root/0``, ...) to its defect norm."""

    valid: bool
    defects: dict[str, float] = field(default_factory=dict)

    @property
    def max_defect(self) -> float:
        return max(self.defects.values(), default=0.0)

    def to_dict(self) -> dict:
        return {"valid": self.valid, "max_defect": self.max_defect, "defects": self.defects}


def node_defect(node: ProtocolNode) -> float:
    """Worst of ``‖Σ K†K - I‖₂`` (acting side) and ``‖U†U - I‖₂`` over corrections."""

    acting = [br.acting(node.party) for br in node.branches]
    d = acting[0].shape[0]
    completeness = sum(k.conj().T @ k for k in acting) - np.eye(d)
    worst = float(np.linalg.norm(completeness, 2))
    for br in node.branches:
        u = br.passive(node.party)
        worst = max(worst, float(np.linalg.norm(u.conj().T @ u - np.eye(u.shape[0]), 2)))
    return worst


def validate_protocol(
    p: Protocol, *, tol: float = DEFAULT_TOLERANCES.protocol
) -> ProtocolValidation:
    defects = {path_name(path): node_defect(node) for path, node in walk(p.root)}
    valid = all(v <= tol for v in defects.values())
    if not valid:
        logger.debug("protocol invalid, defects %s", defects)
    return ProtocolValidation(valid, defects)


def require_valid(p: Protocol, *, tol: float = DEFAULT_TOLERANCES.protocol) -> ProtocolValidation:
    """Like :func:`validate_protocol` but raises :class:`ProtocolStructureError` on failure."""

    v = validate_protocol(p, tol=tol)
    if not v.valid:
        worst = max(v.defects, key=v.defects.__getitem__)
        raise ProtocolStructureError(
            f"completeness defect {v.defects[worst]:.3g} at node {worst} exceeds {tol:g}",
            defects=v.defects,
        )
    return v


def apply_protocol(
    p: Protocol, s: BipartitePureState, *, prune: float = DEFAULT_TOLERANCES.prune
) -> list[BranchOutcome]:
    """Depth-first evaluation; branches whose path probability is below ``prune`` are dropped."""

    p.check_dims(s)
    out: list[BranchOutcome] = []

    def visit(node: ProtocolNode, state: BipartitePureState, prob: float, path: tuple) -> None:
        for k, (br, child) in enumerate(zip(node.branches, node.children, strict=True)):
            w = br.apply(state)
            q = float(np.vdot(w, w).real)
            if prob * q < prune:
                continue
            try:
                post = BipartitePureState.normalized(*p.dims, w)
            except NormalizationError:
                continue
            if isinstance(child, ProtocolNode):
                visit(child, post, prob * q, (*path, k))
            else:
                label = child.label if isinstance(child, Leaf) else None
                out.append(BranchOutcome(prob * q, post, (*path, k), label))

    visit(p.root, s, 1.0, ())
    return out


@dataclass(frozen=True, slots=True)
class InputCheck:
    index: int
    probability_sum: float
    min_fidelity: float
    outcomes: int

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "probability_sum": self.probability_sum,
            "min_fidelity": self.min_fidelity,
            "outcomes": self.outcomes,
        }


@dataclass(frozen=True, slots=True)
class TransformationCheck:
    verified: bool
    inputs: tuple[InputCheck, ...]

    def to_dict(self) -> dict:
        return {"verified": self.verified, "inputs": [c.to_dict() for c in self.inputs]}


def check_set_transformation(
    p: Protocol, pair: SetPair, *, tol: float = DEFAULT_TOLERANCES.verify
) -> TransformationCheck:
    """Per-input probability mass and worst output fidelity (indices are 1-based)."""

    if pair.output_dims != p.dims:
        raise DimensionMismatchError(
            f"protocol acts on {p.dims} but outputs have dims {pair.output_dims}"
        )
    checks = []
    verified = True
    for i, (psi, phi) in enumerate(zip(pair.inputs, pair.outputs, strict=True)):
        outcomes = apply_protocol(p, psi)
        total = float(sum(o.probability for o in outcomes))
        fid = min((fidelity_pure(o.post_state, phi) for o in outcomes), default=0.0)
        ok = abs(total - 1.0) <= tol and fid >= 1.0 - tol
        verified = verified and ok
        checks.append(InputCheck(i + 1, total, fid, len(outcomes)))
        logger.debug("input %d: mass %.12g, min fidelity %.12g", i + 1, total, fid)
    return TransformationCheck(verified, tuple(checks))


def verify_set_transformation(
    p: Protocol, pair: SetPair, *, tol: float = DEFAULT_TOLERANCES.verify
) -> bool:
    """True iff every input lands on its output on every surviving leaf."""

    return check_set_transformation(p, pair, tol=tol).verified
