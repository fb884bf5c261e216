"""Rule cascade deciding perfect LOCC distinguishability of a set of pure states.

Rules are tried in order and the first that fires decides:

- R1  not pairwise orthogonal → NO (not even a global measurement succeeds)
- R2  at most two orthogonal states → YES
- R3  every state is a computational product ket → YES
- R4  three orthogonal two-qubit states → YES iff at least two are product
- R3b a one-round measurement grouping each party's computational basis
      separates the states → YES
- R5  the set contains a listed locally indistinguishable set → NO
- R6  otherwise UNKNOWN

"Perfect" means with certainty; a strategy that succeeds with probability
below one counts as failing.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

import numpy as np
import scipy.linalg

from ..configs import DEFAULT_TOLERANCES
from ..errors import DimensionMismatchError
from ..qstate import BipartitePureState, fidelity_pure
from .types import TriState

logger = logging.getLogger(__name__)

Blocks = tuple[tuple[int, ...], ...]


def _common_dims(states: Sequence[BipartitePureState]) -> tuple[int, int]:
    if len(states) == 0:
        raise ValueError("state list must be non-empty")
    dims = states[0].dims
    for k, s in enumerate(states):
        if s.dims != dims:
            raise DimensionMismatchError(f"state {k} has dims {s.dims}, expected {dims}")
    return dims


def pairwise_orthogonal(
    states: Sequence[BipartitePureState], *, tol: float = DEFAULT_TOLERANCES.comparison
) -> bool:
    """True iff ``|⟨ψ_i|ψ_j⟩| ≤ tol`` for all ``i ≠ j``."""

    _common_dims(states)
    vecs = np.stack([s.amplitudes for s in states], axis=0)
    gram = np.abs(vecs.conj() @ vecs.T)
    np.fill_diagonal(gram, 0.0)
    return bool(np.all(gram <= tol))


def is_product(state: BipartitePureState, *, tol: float = DEFAULT_TOLERANCES.comparison) -> bool:
    """True iff the second Schmidt coefficient is at most ``tol``."""

    s = scipy.linalg.svdvals(state.matrix)
    return bool(s.shape[0] < 2 or s[1] <= tol)


def is_computational_product(
    state: BipartitePureState, *, tol: float = DEFAULT_TOLERANCES.comparison
) -> bool:
    """True iff the state is ``|i⟩|j⟩`` up to a global phase."""

    return bool(np.max(np.abs(state.amplitudes) ** 2) >= 1.0 - tol)


def find_computational_grouping(
    states: Sequence[BipartitePureState], *, tol: float = DEFAULT_TOLERANCES.comparison
) -> tuple[Blocks, Blocks] | None:
    """Computational-basis measurement by both parties that separates ``states``.

    Merging outcomes never helps, so some grouping separates the set exactly
    when the finest one does: every product ket ``|ij⟩`` carries weight above
    ``tol`` in at most one state. Returns the finest blocks, or ``None``.
    """

    dim_a, dim_b = _common_dims(states)
    weights = np.stack([np.abs(s.matrix) ** 2 for s in states], axis=0)
    shared = np.count_nonzero(weights > tol, axis=0) > 1
    if np.any(shared):
        return None
    return tuple((i,) for i in range(dim_a)), tuple((j,) for j in range(dim_b))


def contains_set(
    states: Sequence[BipartitePureState],
    subset: Sequence[BipartitePureState],
    *,
    tol: float = DEFAULT_TOLERANCES.comparison,
) -> bool:
    """True iff every state of ``subset`` occurs in ``states`` up to a global phase."""

    if not states or not subset or states[0].dims != subset[0].dims:
        return False
    return all(any(fidelity_pure(t, s) >= 1.0 - tol for s in states) for t in subset)


def _fmt_blocks(blocks: Blocks) -> str:
    return "{" + ", ".join("{" + ",".join(str(i) for i in b) + "}" for b in blocks) + "}"


def locc_distinguishable(
    states: Sequence[BipartitePureState],
    *,
    tol: float = DEFAULT_TOLERANCES.comparison,
    indistinguishable_sets: Sequence[tuple[str, str, Sequence[BipartitePureState]]] | None = None,
) -> TriState:
    """Tri-state verdict on perfect LOCC discrimination of ``states``.

    ``indistinguishable_sets`` entries are ``(set_id, source, states)``; when
    omitted the sets listed in the bundled known-fact table are used.
    """

    dims = _common_dims(states)
    n = len(states)

    if not pairwise_orthogonal(states, tol=tol):
        logger.debug("R1: set of %d states is not pairwise orthogonal", n)
        return TriState.no(
            "R1",
            "states are not pairwise orthogonal, so no measurement (local or global) "
            "distinguishes them perfectly",
        )

    if n <= 2:
        logger.debug("R2: %d orthogonal states", n)
        return TriState.yes(
            "R2", "any two orthogonal pure states can be perfectly distinguished by LOCC"
        )

    if all(is_computational_product(s, tol=tol) for s in states):
        logger.debug("R3: all states are computational product kets")
        return TriState.yes(
            "R3", "all states are computational-basis product kets; both parties measure locally"
        )

    if dims == (2, 2) and n == 3:
        n_product = sum(is_product(s, tol=tol) for s in states)
        logger.debug("R4: %d of 3 two-qubit states are product", n_product)
        citation = (
            "three orthogonal two-qubit pure states are LOCC distinguishable iff at least "
            "two are product states (Walgate-Hardy)"
        )
        if n_product >= 2:
            return TriState.yes("R4", f"{n_product} product states; {citation}")
        return TriState.no("R4", f"{n_product} product state(s); {citation}")

    grouping = find_computational_grouping(states, tol=tol)
    if grouping is not None:
        blocks_a, blocks_b = grouping
        logger.debug("R3b: grouping A=%s B=%s separates the set", blocks_a, blocks_b)
        return TriState.yes(
            "R3b",
            "a local measurement in the computational basis perfectly distinguishes the states "
            f"(Alice blocks {_fmt_blocks(blocks_a)}, Bob blocks {_fmt_blocks(blocks_b)})",
        )

    if indistinguishable_sets is None:
        from .known_facts import default_known_facts

        indistinguishable_sets = default_known_facts().locc_indistinguishable_sets()
    for set_id, source, subset in indistinguishable_sets:
        if len(subset) <= n and contains_set(states, subset, tol=tol):
            logger.debug("R5: set contains listed indistinguishable set %s", set_id)
            return TriState.no(
                "R5", f"contains the locally indistinguishable set {set_id!r} ({source})"
            )

    logger.debug("R6: no rule decides a set of %d states in %dx%d", n, *dims)
    return TriState.unknown("R6", "no implemented rule decides this set")
