"""Dense linear algebra on small bipartite systems."""

from __future__ import annotations

from typing import Literal

import numpy as np
import scipy.linalg

from ..errors import DimensionMismatchError
from .types import BipartitePureState, DensityOperator, Ensemble

Subsystem = Literal["A", "B"]


def _check_subsystem(subsystem: str) -> None:
    if subsystem not in ("A", "B"):
        raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")


def psd_sqrt(m: np.ndarray) -> np.ndarray:
    """Square root of a Hermitian PSD matrix; negative round-off eigenvalues clip to 0."""

    w, v = scipy.linalg.eigh(0.5 * (m + m.conj().T))
    w = np.clip(w, 0.0, None)
    return (v * np.sqrt(w)[None, :]) @ v.conj().T


def fidelity_pure(a: BipartitePureState, b: BipartitePureState) -> float:
    """``|⟨a|b⟩|``."""

    return float(min(1.0, abs(a.inner(b))))


def fidelity_mixed(r: DensityOperator, s: DensityOperator) -> float:
    """Uhlmann fidelity ``Tr √(√s r √s)``, computed as ``‖√r √s‖₁``."""

    if r.dims != s.dims:
        raise DimensionMismatchError(f"dims differ: {r.dims} vs {s.dims}")
    f = float(np.sum(scipy.linalg.svdvals(psd_sqrt(r.matrix) @ psd_sqrt(s.matrix))))
    return float(min(1.0, max(0.0, f)))


def trace_norm(o: np.ndarray) -> float:
    """Sum of singular values."""

    o = np.asarray(o, dtype=complex)
    if o.ndim != 2 or o.shape[0] != o.shape[1]:
        raise DimensionMismatchError(f"trace norm needs a square matrix, got shape {o.shape}")
    return float(np.sum(scipy.linalg.svdvals(o)))


def _matrix_and_dims(
    r: DensityOperator | np.ndarray, dims: tuple[int, int] | None
) -> tuple[np.ndarray, int, int]:
    if isinstance(r, DensityOperator):
        return np.asarray(r.matrix), r.dim_a, r.dim_b
    if dims is None:
        raise ValueError("dims are required when passing a bare matrix")
    m = np.asarray(r, dtype=complex)
    dim_a, dim_b = int(dims[0]), int(dims[1])
    if m.shape != (dim_a * dim_b, dim_a * dim_b):
        raise DimensionMismatchError(f"matrix of shape {m.shape} does not act on {dim_a}x{dim_b}")
    return m, dim_a, dim_b


def partial_transpose(
    r: DensityOperator | np.ndarray,
    subsystem: Subsystem = "B",
    *,
    dims: tuple[int, int] | None = None,
) -> np.ndarray:
    """Transpose the indices of one subsystem.

    Accepts a :class:`DensityOperator` or a bare matrix with ``dims`` (the
    result of a partial transpose is generally not a density operator).
    """

    _check_subsystem(subsystem)
    m, dim_a, dim_b = _matrix_and_dims(r, dims)
    t = m.reshape(dim_a, dim_b, dim_a, dim_b)
    t = t.transpose(0, 3, 2, 1) if subsystem == "B" else t.transpose(2, 1, 0, 3)
    return t.reshape(dim_a * dim_b, dim_a * dim_b)


def partial_trace(
    r: DensityOperator | np.ndarray,
    subsystem: Subsystem = "B",
    *,
    dims: tuple[int, int] | None = None,
) -> np.ndarray:
    """Trace out ``subsystem``; returns the reduced matrix of the other party."""

    _check_subsystem(subsystem)
    m, dim_a, dim_b = _matrix_and_dims(r, dims)
    t = m.reshape(dim_a, dim_b, dim_a, dim_b)
    if subsystem == "B":
        return np.einsum("ijkj->ik", t)
    return np.einsum("ijil->jl", t)


def ensemble_density(e: Ensemble) -> DensityOperator:
    """``Σ p_i |ψ_i⟩⟨ψ_i|``."""

    dim_a, dim_b = e.dims
    vecs = np.stack([s.amplitudes for s in e.states], axis=1)
    m = (vecs * e.probs[None, :]) @ vecs.conj().T
    return DensityOperator(dim_a, dim_b, m)
