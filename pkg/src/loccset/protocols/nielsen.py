"""Constructive deterministic conversion between two bipartite pure states.

When the squared Schmidt vector ``x`` of the input is majorized by ``y`` of
the output, ``y`` can be pulled down to ``x`` by a chain of T-transforms
``T = t·I + (1 - t)·P_jk`` (``P_jk`` swaps two coordinates). Walking the chain
backwards, each step ``x' = T y'`` is realised by Alice measuring

    M1 = sqrt(t) · diag(sqrt(y'_i / x'_i))
    M2 = sqrt(1 - t) · diag(sqrt(y'_{π(i)} / x'_i))

in the Schmidt basis; the second outcome leaves ``y'`` with coordinates ``j``
and ``k`` swapped, which both parties undo with the same permutation. The
protocol is wrapped in the local unitaries that bring the input to, and the
output from, diagonal Schmidt form.
"""

from __future__ import annotations

import logging

import numpy as np

from ..configs import DEFAULT_TOLERANCES
from ..entanglement import majorization_check
from ..errors import DimensionMismatchError, InfeasibleTransformationError
from ..qstate import BipartitePureState, fidelity_pure, local_schmidt_bases
from .types import Leaf, ProductKraus, Protocol, ProtocolNode

logger = logging.getLogger(__name__)

_EQ_EPS = 1e-12


def t_transform_chain(x: np.ndarray, y: np.ndarray) -> list[tuple[int, int, float, np.ndarray]]:
    """Steps ``(j, k, t, y_next)`` taking ``y`` down to ``x``.

    Both vectors are sorted nonincreasing with equal length and ``x ≺ y``.
    Each ``y_next = t·y + (1 - t)·P_jk y`` stays sorted and agrees with ``x`` in
    at least one more coordinate, so there are at most ``len(x) - 1`` steps.
    """

    y = np.array(y, dtype=float)
    x = np.asarray(x, dtype=float)
    steps: list[tuple[int, int, float, np.ndarray]] = []
    for _ in range(len(x)):
        diff = y - x
        above = np.flatnonzero(diff > _EQ_EPS)
        if above.size == 0:
            break
        j = int(above[-1])
        below = np.flatnonzero(diff[j + 1 :] < -_EQ_EPS)
        if below.size == 0:
            break
        k = j + 1 + int(below[0])
        delta = min(y[j] - x[j], x[k] - y[k])
        t = float(np.clip((y[j] - delta - y[k]) / (y[j] - y[k]), 0.0, 1.0))
        swapped = y.copy()
        swapped[[j, k]] = swapped[[k, j]]
        y_next = t * y + (1.0 - t) * swapped
        steps.append((j, k, t, y_next))
        y = y_next
    return steps


def _swap(d: int, j: int, k: int) -> np.ndarray:
    p = np.eye(d)
    p[[j, k]] = p[[k, j]]
    return p


def _step_node(
    y: np.ndarray, j: int, k: int, t: float, dims: tuple[int, int], child: ProtocolNode | Leaf
) -> ProtocolNode:
    """Two-outcome Alice measurement taking diag(sqrt(t·y + (1-t)·P y)) to diag(sqrt(y))."""

    dim_a, dim_b = dims
    swapped = y.copy()
    swapped[[j, k]] = swapped[[k, j]]
    x = t * y + (1.0 - t) * swapped

    m1 = np.ones(dim_a)
    m2 = np.zeros(dim_a)
    for i in range(len(y)):
        if x[i] > _EQ_EPS:
            m1[i] = np.sqrt(t * y[i] / x[i])
            m2[i] = np.sqrt((1.0 - t) * swapped[i] / x[i])

    pa = _swap(dim_a, j, k)
    pb = _swap(dim_b, j, k)
    branches = (
        ProductKraus(np.diag(m1), np.eye(dim_b)),
        ProductKraus(pa @ np.diag(m2), pb),
    )
    return ProtocolNode("A", branches, (child, child))


def synthesize_nielsen_protocol(
    input: BipartitePureState,
    output: BipartitePureState,
    *,
    tol: float = DEFAULT_TOLERANCES.comparison,
    label: str | None = None,
) -> Protocol:
    """Deterministic LOCC protocol for ``input → output``.

    Raises :class:`InfeasibleTransformationError` when the Nielsen criterion
    fails. Leaves carry ``label``.
    """

    if input.dims != output.dims:
        raise DimensionMismatchError(
            f"input dims {input.dims} differ from output dims {output.dims}"
        )
    dims = input.dims
    verdict = majorization_check(input, output, tol=tol)
    if not verdict.holds:
        raise InfeasibleTransformationError(
            "Nielsen criterion fails at l = "
            f"{verdict.first_violating_l}: no deterministic LOCC conversion exists"
        )

    leaf = Leaf(label)
    if fidelity_pure(input, output) >= 1.0 - _EQ_EPS:
        root = ProtocolNode("A", (ProductKraus.identity(*dims),), (leaf,))
        return Protocol(dims, root, 1)

    s_in, u_in, vh_in = local_schmidt_bases(input)
    s_out, u_out, vh_out = local_schmidt_bases(output)
    x = s_in**2
    y = s_out**2

    # Last round: diagonal Schmidt form to the output's local bases.
    node: ProtocolNode = ProtocolNode("A", (ProductKraus(u_out, vh_out.T),), (leaf,))

    steps = t_transform_chain(x, y)
    ys = [y] + [s[3] for s in steps]
    # Step 0 is applied last, so it sits closest to the leaves.
    for n, (j, k, t, _) in enumerate(steps):
        logger.debug("T-transform step %d: swap (%d, %d), t = %.6g", n, j, k, t)
        node = _step_node(ys[n], j, k, t, dims, node)

    # First round: input's local bases to diagonal Schmidt form.
    root = ProtocolNode("A", (ProductKraus(u_in.conj().T, vh_in.conj()),), (node,))
    return Protocol.of(root)
