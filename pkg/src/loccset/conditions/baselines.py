"""Pairwise fidelity and trace-norm baselines for general (not LOCC) operations.

These are the known criteria for deterministic set transformations when any
quantum operation is allowed. Pair indices in results are 1-based.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from ..configs import DEFAULT_TOLERANCES
from ..distinguishability import TriState
from ..errors import DimensionMismatchError
from ..qstate import (
    BipartitePureState,
    DensityOperator,
    SetPair,
    fidelity_mixed,
    fidelity_pure,
    trace_norm,
)
from .simplex import SimplexPoint, interior_grid

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class FidelityWitness:
    i: int
    j: int
    f_in: float
    f_out: float

    @property
    def margin(self) -> float:
        return self.f_out - self.f_in

    def to_dict(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "f_in": self.f_in,
            "f_out": self.f_out,
            "margin": self.margin,
        }


@dataclass(frozen=True, slots=True)
class Lemma1Result:
    verdict: TriState
    worst: FidelityWitness | None

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.to_dict(),
            "worst": None if self.worst is None else self.worst.to_dict(),
        }


def lemma1_check(pair: SetPair, *, tol: float = DEFAULT_TOLERANCES.comparison) -> Lemma1Result:
    """Pairwise fidelities may not decrease: ``F(φ_i, φ_j) ≥ F(ψ_i, ψ_j)``.

    ``worst`` is the pair with the smallest slack ``F_out - F_in``.
    """

    worst: FidelityWitness | None = None
    for i in range(pair.n):
        for j in range(i + 1, pair.n):
            w = FidelityWitness(
                i=i + 1,
                j=j + 1,
                f_in=fidelity_pure(pair.inputs[i], pair.inputs[j]),
                f_out=fidelity_pure(pair.outputs[i], pair.outputs[j]),
            )
            if worst is None or w.margin < worst.margin:
                worst = w

    if worst is None:
        return Lemma1Result(TriState.yes("fidelity", "single state: no pairs to compare"), None)
    if worst.margin < -tol:
        return Lemma1Result(
            TriState.no(
                "fidelity",
                f"F(φ{worst.i},φ{worst.j}) = {worst.f_out:.6g} < "
                f"F(ψ{worst.i},ψ{worst.j}) = {worst.f_in:.6g}; "
                "pairwise fidelity cannot decrease under a deterministic operation",
            ),
            worst,
        )
    return Lemma1Result(
        TriState.yes(
            "fidelity", f"no pairwise fidelity decreases (min slack {worst.margin:.3g})"
        ),
        worst,
    )


def _check_two(inputs: Sequence, outputs: Sequence) -> None:
    if len(inputs) != 2 or len(outputs) != 2:
        raise ValueError(
            f"need exactly two inputs and two outputs, got {len(inputs)} and {len(outputs)}"
        )


def _as_density(x: DensityOperator | BipartitePureState) -> DensityOperator:
    return x.projector() if isinstance(x, BipartitePureState) else x


def lemma2_pair_feasible(
    inputs: Sequence[BipartitePureState],
    outputs: Sequence[DensityOperator | BipartitePureState],
    *,
    tol: float = DEFAULT_TOLERANCES.comparison,
) -> bool:
    """Whether some quantum operation maps two pure inputs onto two outputs.

    Holds iff ``F(σ1, σ2) ≥ F(ψ1, ψ2)``. This says nothing about LOCC.
    """

    _check_two(inputs, outputs)
    f_in = fidelity_pure(inputs[0], inputs[1])
    f_out = fidelity_mixed(_as_density(outputs[0]), _as_density(outputs[1]))
    return bool(f_out + tol >= f_in)


def _qubit_matrix(x: DensityOperator | np.ndarray, name: str) -> np.ndarray:
    m = np.asarray(x.matrix if isinstance(x, DensityOperator) else x, dtype=complex)
    if m.shape != (2, 2):
        raise DimensionMismatchError(f"{name} must be a single-qubit (2x2) operator, got {m.shape}")
    return m


@dataclass(frozen=True, slots=True, eq=False)
class Lemma3Result:
    verdict: TriState
    margin: float
    worst_point: SimplexPoint
    points: int

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.to_dict(),
            "margin": self.margin,
            "worst_p": self.worst_point.to_list(),
            "points": self.points,
        }


def lemma3_qubit_check(
    inputs: Sequence[DensityOperator | np.ndarray],
    outputs: Sequence[DensityOperator | np.ndarray],
    *,
    resolution: int = 50,
    tol: float = DEFAULT_TOLERANCES.comparison,
) -> Lemma3Result:
    """Trace-norm criterion for two qubit states.

    Checks ``‖p1 σ1 - p2 σ2‖₁ ≤ ‖p1 ρ1 - p2 ρ2‖₁`` on the interior points
    ``p1 = k / resolution``. ``margin`` is the smallest ``RHS - LHS`` and
    ``worst_point`` where it occurs; a negative margin below ``-tol`` is a
    definite NO, otherwise the verdict is YES on the sampled grid only.
    """

    _check_two(inputs, outputs)
    r1, r2 = (_qubit_matrix(x, f"input {k + 1}") for k, x in enumerate(inputs))
    s1, s2 = (_qubit_matrix(x, f"output {k + 1}") for k, x in enumerate(outputs))

    worst_margin = np.inf
    worst_point: SimplexPoint | None = None
    count = 0
    for point in interior_grid(2, resolution):
        p1, p2 = point.probs
        rhs = trace_norm(p1 * r1 - p2 * r2)
        lhs = trace_norm(p1 * s1 - p2 * s2)
        count += 1
        if rhs - lhs < worst_margin:
            worst_margin = rhs - lhs
            worst_point = point
    assert worst_point is not None

    logger.debug("lemma3: %d points, min margin %.3g", count, worst_margin)
    if worst_margin < -tol:
        verdict = TriState.no(
            "trace-norm",
            f"‖p1σ1 - p2σ2‖₁ exceeds ‖p1ρ1 - p2ρ2‖₁ by {-worst_margin:.6g} "
            f"at p = {[round(x, 6) for x in worst_point.to_list()]}",
        )
    else:
        verdict = TriState.yes(
            "trace-norm",
            f"trace-norm inequality holds on {count} grid points (sampled; "
            f"min slack {worst_margin:.3g})",
        )
    return Lemma3Result(verdict, float(worst_margin), worst_point, count)
