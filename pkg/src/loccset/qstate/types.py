from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from ..configs import DEFAULT_TOLERANCES
from ..errors import DimensionMismatchError, NormalizationError

DEGENERATE_NORM = 1e-12


def _check_dims(dim_a: int, dim_b: int) -> None:
    if int(dim_a) < 1 or int(dim_b) < 1:
        raise DimensionMismatchError(f"dims must be >= 1, got ({dim_a}, {dim_b})")


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, slots=True, eq=False)
class BipartitePureState:
    """Pure state on C^dim_a ⊗ C^dim_b.

    Amplitudes are stored row-major: index ``i * dim_b + j`` is the coefficient
    of ``|i⟩|j⟩``. Construction validates normalisation; use
    :meth:`normalized` to build from an unnormalised vector.
    """

    dim_a: int
    dim_b: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        _check_dims(self.dim_a, self.dim_b)
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape[0] != self.dim_a * self.dim_b:
            raise DimensionMismatchError(
                f"amplitude vector has length {amps.shape[0]}, "
                f"expected dim_a*dim_b = {self.dim_a * self.dim_b}"
            )
        if not np.all(np.isfinite(amps)):
            raise NormalizationError("amplitudes must be finite")
        norm = float(np.linalg.norm(amps))
        if norm < DEGENERATE_NORM:
            raise NormalizationError("degenerate state (norm < 1e-12)")
        if abs(norm**2 - 1.0) > DEFAULT_TOLERANCES.invariant:
            raise NormalizationError(f"state is not normalised: squared norm {norm**2:.12g}")
        object.__setattr__(self, "dim_a", int(self.dim_a))
        object.__setattr__(self, "dim_b", int(self.dim_b))
        object.__setattr__(self, "amplitudes", _frozen(amps))

    @property
    def dims(self) -> tuple[int, int]:
        return (self.dim_a, self.dim_b)

    @property
    def matrix(self) -> np.ndarray:
        """Coefficient matrix ``M[i, j] = ⟨ij|ψ⟩`` of shape (dim_a, dim_b)."""

        return self.amplitudes.reshape(self.dim_a, self.dim_b)

    def projector(self) -> DensityOperator:
        v = self.amplitudes
        return DensityOperator(self.dim_a, self.dim_b, np.outer(v, v.conj()))

    def inner(self, other: BipartitePureState) -> complex:
        """⟨self|other⟩."""

        if self.dims != other.dims:
            raise DimensionMismatchError(f"dims differ: {self.dims} vs {other.dims}")
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def apply_local(self, a_op: np.ndarray, b_op: np.ndarray) -> np.ndarray:
        """Unnormalised amplitudes of ``(A ⊗ B)|ψ⟩``."""

        return apply_product(a_op, b_op, self.amplitudes, self.dims)

    @staticmethod
    def normalized(dim_a: int, dim_b: int, amplitudes: np.ndarray) -> BipartitePureState:
        amps = np.asarray(amplitudes, dtype=complex).reshape(-1)
        norm = float(np.linalg.norm(amps))
        if norm < DEGENERATE_NORM:
            raise NormalizationError("degenerate state (norm < 1e-12)")
        return BipartitePureState(dim_a, dim_b, amps / norm)

    @staticmethod
    def from_matrix(m: np.ndarray) -> BipartitePureState:
        m = np.asarray(m, dtype=complex)
        if m.ndim != 2:
            raise DimensionMismatchError(f"coefficient matrix must be 2D, got shape {m.shape}")
        return BipartitePureState(m.shape[0], m.shape[1], m.reshape(-1))

    @staticmethod
    def basis(i: int, j: int, dim_a: int, dim_b: int) -> BipartitePureState:
        """Computational product ket ``|i⟩|j⟩``."""

        if not (0 <= i < dim_a and 0 <= j < dim_b):
            raise DimensionMismatchError(f"ket |{i}{j}⟩ outside {dim_a}x{dim_b}")
        amps = np.zeros(dim_a * dim_b, dtype=complex)
        amps[i * dim_b + j] = 1.0
        return BipartitePureState(dim_a, dim_b, amps)

    def __repr__(self) -> str:
        return f"BipartitePureState(dims={self.dims}, amplitudes={np.round(self.amplitudes, 6)})"


@dataclass(frozen=True, slots=True, eq=False)
class DensityOperator:
    """Density operator on C^dim_a ⊗ C^dim_b (Hermitian, unit trace, PSD)."""

    dim_a: int
    dim_b: int
    matrix: np.ndarray

    def __post_init__(self) -> None:
        _check_dims(self.dim_a, self.dim_b)
        m = np.asarray(self.matrix, dtype=complex)
        d = self.dim_a * self.dim_b
        if m.shape != (d, d):
            raise DimensionMismatchError(
                f"density matrix must have shape ({d}, {d}), got {m.shape}"
            )
        tol = DEFAULT_TOLERANCES.invariant
        if float(np.max(np.abs(m - m.conj().T))) > tol:
            raise NormalizationError("density matrix is not Hermitian")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > tol:
            raise NormalizationError(f"density matrix trace is {tr.real:.12g}, expected 1")
        lam_min = float(np.linalg.eigvalsh(0.5 * (m + m.conj().T))[0])
        if lam_min < -tol:
            raise NormalizationError(f"density matrix is not PSD (min eigenvalue {lam_min:.3g})")
        object.__setattr__(self, "dim_a", int(self.dim_a))
        object.__setattr__(self, "dim_b", int(self.dim_b))
        object.__setattr__(self, "matrix", _frozen(m))

    @property
    def dims(self) -> tuple[int, int]:
        return (self.dim_a, self.dim_b)


@dataclass(frozen=True, slots=True, eq=False)
class SchmidtDecomposition:
    """``ψ = Σ_k c_k u_k ⊗ v_k`` with ``c`` nonincreasing.

    ``left_vectors[:, k]`` is ``u_k`` and ``right_vectors[:, k]`` is ``v_k``.
    """

    coefficients: np.ndarray
    left_vectors: np.ndarray
    right_vectors: np.ndarray

    @property
    def rank(self) -> int:
        return int(self.coefficients.shape[0])

    def reconstruct(self) -> np.ndarray:
        m = (self.left_vectors * self.coefficients[None, :]) @ self.right_vectors.T
        return m.reshape(-1)


@dataclass(frozen=True, slots=True, eq=False)
class Ensemble:
    """Probability-weighted list of pure states with common dims."""

    probs: np.ndarray
    states: tuple[BipartitePureState, ...]

    def __post_init__(self) -> None:
        probs = np.array(self.probs, dtype=float).reshape(-1)
        states = tuple(self.states)
        if len(states) == 0:
            raise ValueError("ensemble must contain at least one state")
        if probs.shape[0] != len(states):
            raise ValueError(f"got {probs.shape[0]} probabilities for {len(states)} states")
        if np.any(probs <= 0.0) or np.any(probs > 1.0):
            raise NormalizationError("ensemble probabilities must lie in (0, 1]")
        if abs(float(probs.sum()) - 1.0) > DEFAULT_TOLERANCES.invariant:
            raise NormalizationError(f"ensemble probabilities sum to {probs.sum():.12g}")
        dims = states[0].dims
        for k, s in enumerate(states):
            if s.dims != dims:
                raise DimensionMismatchError(f"state {k} has dims {s.dims}, expected {dims}")
        probs.setflags(write=False)
        object.__setattr__(self, "probs", probs)
        object.__setattr__(self, "states", states)

    @property
    def dims(self) -> tuple[int, int]:
        return self.states[0].dims

    @staticmethod
    def of(probs: Sequence[float], states: Sequence[BipartitePureState]) -> Ensemble:
        return Ensemble(np.asarray(probs, dtype=float), tuple(states))


def apply_product(
    a_op: np.ndarray, b_op: np.ndarray, amplitudes: np.ndarray, dims: tuple[int, int]
) -> np.ndarray:
    """``(A ⊗ B) v`` computed as ``A M Bᵀ`` on the coefficient matrix."""

    dim_a, dim_b = dims
    a_op = np.asarray(a_op, dtype=complex)
    b_op = np.asarray(b_op, dtype=complex)
    if a_op.shape != (dim_a, dim_a) or b_op.shape != (dim_b, dim_b):
        raise DimensionMismatchError(
            f"operators of shape {a_op.shape} ⊗ {b_op.shape} do not act on {dim_a}x{dim_b}"
        )
    m = np.asarray(amplitudes, dtype=complex).reshape(dim_a, dim_b)
    return (a_op @ m @ b_op.T).reshape(-1)
