"""Subspace-split measurements on ensembles and the ebits they yield."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ..configs import DEFAULT_TOLERANCES
from ..entanglement import pure_state_entropy
from ..errors import DimensionMismatchError
from ..qstate import BipartitePureState, Ensemble, ensemble_density
from .ip import check_partition, subspace_measurement
from .types import Leaf, Party, Protocol, ProtocolNode

logger = logging.getLogger(__name__)


def subspace_split_protocol(
    dim_a: int, dim_b: int, blocks: Sequence[Sequence[int]], *, party: Party = "A"
) -> Protocol:
    """One projective measurement onto the given blocks of ``party``'s basis."""

    checked = check_partition(blocks, dim_a if party == "A" else dim_b)
    leaves = [Leaf(f"block{b}") for b in range(len(checked))]
    return Protocol.of(subspace_measurement((dim_a, dim_b), checked, leaves, party=party))


@dataclass(frozen=True, slots=True, eq=False)
class EnsembleBranch:
    probability: float
    path: tuple[int, ...]
    density: np.ndarray
    label: str | None = None

    @property
    def purity(self) -> float:
        return float(np.real(np.trace(self.density @ self.density)))


def apply_protocol_to_ensemble(
    p: Protocol, e: Ensemble, *, prune: float = DEFAULT_TOLERANCES.prune
) -> list[EnsembleBranch]:
    """Leaf branches of ``p`` applied to ``ρ = Σ p_i |ψ_i⟩⟨ψ_i|``, normalised."""

    if e.dims != p.dims:
        raise DimensionMismatchError(f"protocol acts on {p.dims} but ensemble has dims {e.dims}")
    out: list[EnsembleBranch] = []

    def visit(node: ProtocolNode, rho: np.ndarray, prob: float, path: tuple) -> None:
        for k, (br, child) in enumerate(zip(node.branches, node.children, strict=True)):
            op = br.full()
            sigma = op @ rho @ op.conj().T
            q = float(np.real(np.trace(sigma)))
            if prob * q < prune:
                continue
            sigma = sigma / q
            if isinstance(child, ProtocolNode):
                visit(child, sigma, prob * q, (*path, k))
            else:
                label = child.label if isinstance(child, Leaf) else None
                out.append(EnsembleBranch(prob * q, (*path, k), sigma, label))

    visit(p.root, np.asarray(ensemble_density(e).matrix), 1.0, ())
    return out


def distilled_ebits(
    p: Protocol, e: Ensemble, *, tol: float = DEFAULT_TOLERANCES.verify
) -> float:
    """Ebits left in the leaves of ``p`` whose state is pure.

    Sums ``probability × entropy of entanglement`` over leaves with purity at
    least ``1 - tol``; mixed leaves contribute nothing, so the value is a lower
    bound on the distillable entanglement of the ensemble's mixture.
    """

    total = 0.0
    for br in apply_protocol_to_ensemble(p, e):
        if br.purity < 1.0 - tol:
            continue
        _, v = scipy.linalg.eigh(0.5 * (br.density + br.density.conj().T))
        state = BipartitePureState.normalized(*p.dims, v[:, -1])
        ebits = pure_state_entropy(state)
        logger.debug("branch %s: p=%.6g, %.6g ebit", br.path, br.probability, ebits)
        total += br.probability * ebits
    return float(total)
