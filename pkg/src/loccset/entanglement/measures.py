"""Entanglement measures.

Concurrence and entanglement of formation are two-qubit only; negativity works
in any dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, get_args

import numpy as np
import scipy.linalg
import scipy.special
import scipy.stats

from ..errors import DimensionMismatchError
from ..qstate import (
    BipartitePureState,
    DensityOperator,
    partial_transpose,
    squared_schmidt_coefficients,
)

MeasureName = Literal["concurrence", "negativity", "eof_2q"]
MEASURE_NAMES: tuple[str, ...] = get_args(MeasureName)

_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_SPIN_FLIP = np.kron(_SIGMA_Y, _SIGMA_Y)
# eigenvalues of ρ at or below this are treated as roundoff
_RANK_CUTOFF = 1e-13


@dataclass(frozen=True, slots=True)
class MeasureValue:
    measure: MeasureName
    value: float

    def __post_init__(self) -> None:
        if self.measure not in MEASURE_NAMES:
            raise ValueError(f"measure must be one of {MEASURE_NAMES}, got {self.measure!r}")
        if not np.isfinite(self.value) or self.value < 0.0:
            raise ValueError(f"{self.measure} value must be finite and >= 0, got {self.value}")


def _require_two_qubits(r: DensityOperator) -> None:
    if r.dims != (2, 2):
        raise DimensionMismatchError(f"two-qubit measure needs dims (2, 2), got {r.dims}")


def concurrence_2q(r: DensityOperator) -> float:
    """Wootters concurrence ``max(0, λ1 - λ2 - λ3 - λ4)``.

    The ``λ_i`` are the decreasing square roots of the eigenvalues of
    ``ρ ρ̃`` with ``ρ̃ = (σy⊗σy) ρ* (σy⊗σy)``, taken here as the singular
    values of ``Ψᵀ (σy⊗σy) Ψ`` for the eigen-ensemble ``ρ = Ψ Ψ†``.
    """

    _require_two_qubits(r)
    evals, evecs = scipy.linalg.eigh(np.asarray(r.matrix))
    keep = evals > _RANK_CUTOFF
    psi = evecs[:, keep] * np.sqrt(evals[keep])[None, :]
    lam = np.zeros(4)
    if psi.shape[1]:
        sv = scipy.linalg.svdvals(psi.T @ _SPIN_FLIP @ psi)
        lam[: sv.shape[0]] = sv
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def negativity(r: DensityOperator) -> float:
    """Sum of ``|λ|`` over negative eigenvalues of the partial transpose."""

    ev = scipy.linalg.eigvalsh(partial_transpose(r, "B"))
    return float(-np.sum(np.minimum(ev, 0.0)))


def binary_entropy(x: float) -> float:
    """``h(x)`` in bits."""

    x = float(np.clip(x, 0.0, 1.0))
    return float((scipy.special.entr(x) + scipy.special.entr(1.0 - x)) / np.log(2.0))


def eof_from_concurrence(c: float) -> float:
    c = float(np.clip(c, 0.0, 1.0))
    return binary_entropy(0.5 * (1.0 + np.sqrt(1.0 - c * c)))


def eof_2q(r: DensityOperator) -> float:
    """Two-qubit entanglement of formation in ebits."""

    return eof_from_concurrence(concurrence_2q(r))


def pure_state_entropy(s: BipartitePureState) -> float:
    """Entropy of entanglement (ebits) of a pure state."""

    return float(scipy.stats.entropy(squared_schmidt_coefficients(s), base=2))


_MEASURES = {
    "negativity": negativity,
    "concurrence": concurrence_2q,
    "eof_2q": eof_2q,
}


def measure_value(name: MeasureName, r: DensityOperator) -> MeasureValue:
    """Evaluate a named mixed-state measure."""

    try:
        fn = _MEASURES[name]
    except KeyError as exc:
        raise ValueError(f"unknown measure {name!r}; expected one of {sorted(_MEASURES)}") from exc
    return MeasureValue(measure=name, value=fn(r))


def applicable_measures(dims: tuple[int, int]) -> tuple[str, ...]:
    """Mixed-state measures defined on a system of the given dims."""

    if tuple(dims) == (2, 2):
        return ("negativity", "concurrence", "eof_2q")
    return ("negativity",)
