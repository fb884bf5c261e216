"""Identify-and-prepare protocols built on a nondestructive subspace measurement."""

from __future__ import annotations

import logging
from collections.abc import Sequence

import numpy as np

from ..configs import DEFAULT_TOLERANCES
from ..entanglement import majorization_check
from ..errors import InfeasibleTransformationError, PartitionError
from ..qstate import BipartitePureState, SetPair
from .nielsen import synthesize_nielsen_protocol
from .types import Child, Leaf, Party, ProductKraus, Protocol, ProtocolNode

logger = logging.getLogger(__name__)

Blocks = tuple[tuple[int, ...], ...]


def check_partition(blocks: Sequence[Sequence[int]], dim: int) -> Blocks:
    """Blocks must be non-empty and partition ``range(dim)``."""

    out = tuple(tuple(int(i) for i in b) for b in blocks)
    if any(len(b) == 0 for b in out):
        raise PartitionError("partition blocks must be non-empty")
    flat = sorted(i for b in out for i in b)
    if flat != list(range(dim)):
        raise PartitionError(f"blocks {out} do not partition the basis 0..{dim - 1}")
    return out


def block_projector(block: Sequence[int], dim: int) -> np.ndarray:
    p = np.zeros((dim, dim))
    for i in block:
        p[i, i] = 1.0
    return p


def _local_weights(state: BipartitePureState, party: str) -> np.ndarray:
    m = np.abs(state.matrix) ** 2
    return m.sum(axis=1) if party == "A" else m.sum(axis=0)


def block_of(
    state: BipartitePureState,
    blocks: Blocks,
    *,
    party: str = "A",
    tol: float = DEFAULT_TOLERANCES.comparison,
) -> int | None:
    """Index of the block holding all of ``state``'s local support, or ``None``."""

    w = _local_weights(state, party)
    for b, block in enumerate(blocks):
        if float(w[list(block)].sum()) >= 1.0 - tol:
            return b
    return None


def subspace_measurement(
    dims: tuple[int, int], blocks: Blocks, children: Sequence[Child], *, party: Party = "A"
) -> ProtocolNode:
    dim_a, dim_b = dims
    if party == "A":
        branches = tuple(ProductKraus(block_projector(b, dim_a), np.eye(dim_b)) for b in blocks)
    else:
        branches = tuple(ProductKraus(np.eye(dim_a), block_projector(b, dim_b)) for b in blocks)
    return ProtocolNode(party, branches, tuple(children))


def build_ip_protocol(
    pair: SetPair,
    partition: Sequence[Sequence[int]],
    *,
    party: Party = "A",
    tol: float = DEFAULT_TOLERANCES.comparison,
) -> Protocol:
    """Measure which block holds the input, then run that input's Nielsen protocol.

    Every pair ``(ψ_i, φ_i)`` must satisfy majorization, and the measuring
    party's supports of the inputs must fall into distinct blocks, so the
    measurement identifies the input without disturbing it.
    """

    if pair.input_dims != pair.output_dims:
        raise PartitionError(
            f"inputs {pair.input_dims} and outputs {pair.output_dims} live on different systems"
        )
    for i, (psi, phi) in enumerate(zip(pair.inputs, pair.outputs, strict=True)):
        v = majorization_check(psi, phi, tol=tol)
        if not v.holds:
            raise InfeasibleTransformationError(
                f"Nielsen criterion fails for (ψ{i + 1}, φ{i + 1}) at l = {v.first_violating_l}"
            )

    dims = pair.input_dims
    blocks = check_partition(partition, dims[0] if party == "A" else dims[1])
    owner: dict[int, int] = {}
    for i, psi in enumerate(pair.inputs):
        b = block_of(psi, blocks, party=party, tol=tol)
        if b is None:
            raise PartitionError(f"input {i + 1} is not supported inside a single block")
        if b in owner:
            raise PartitionError(
                f"inputs {owner[b] + 1} and {i + 1} share block {blocks[b]}; "
                "the measurement cannot tell them apart"
            )
        owner[b] = i

    children: list[Child] = []
    for b in range(len(blocks)):
        if b not in owner:
            children.append(Leaf("unused"))
            continue
        i = owner[b]
        sub = synthesize_nielsen_protocol(
            pair.inputs[i], pair.outputs[i], tol=tol, label=f"φ{i + 1}"
        )
        logger.debug("block %s identifies input %d (%d rounds)", blocks[b], i + 1, sub.depth)
        children.append(sub.root)

    return Protocol.of(subspace_measurement(dims, blocks, children, party=party))
