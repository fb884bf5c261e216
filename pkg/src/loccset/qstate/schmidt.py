from __future__ import annotations

import numpy as np
import scipy.linalg

from ..configs import DEFAULT_TOLERANCES
from ..errors import InvariantViolation, NormalizationError
from .types import BipartitePureState, SchmidtDecomposition

_PHASE_EPS = 1e-12


def _fix_phases(u: np.ndarray, vh: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Rotate each left vector so its first nonzero entry is real positive.

    The compensating phase goes onto the matching row of ``vh`` so every
    ``u[:, k] ⊗ vh[k, :]`` product is unchanged.
    """

    u = u.copy()
    vh = vh.copy()
    for k in range(min(u.shape[1], vh.shape[0])):
        col = u[:, k]
        nz = np.flatnonzero(np.abs(col) > _PHASE_EPS)
        if nz.size == 0:
            continue
        phase = col[nz[0]] / abs(col[nz[0]])
        u[:, k] = col * np.conj(phase)
        vh[k, :] = vh[k, :] * phase
    return u, vh


def schmidt_decompose(
    state: BipartitePureState, *, tol: float = DEFAULT_TOLERANCES.invariant
) -> SchmidtDecomposition:
    """Schmidt decomposition via SVD of the coefficient matrix.

    Coefficients at or below ``tol`` are dropped.
    """

    norm2 = float(np.vdot(state.amplitudes, state.amplitudes).real)
    if abs(norm2 - 1.0) > DEFAULT_TOLERANCES.invariant:
        raise NormalizationError(f"state is not normalised: squared norm {norm2:.12g}")

    u, s, vh = scipy.linalg.svd(state.matrix, full_matrices=False)
    u, vh = _fix_phases(u, vh)

    keep = s > tol
    if not np.any(keep):
        raise NormalizationError("state has no Schmidt coefficient above tolerance")
    out = SchmidtDecomposition(
        coefficients=s[keep].astype(float),
        left_vectors=u[:, keep],
        right_vectors=vh[keep, :].T,
    )

    err = float(np.linalg.norm(out.reconstruct() - state.amplitudes))
    if err > DEFAULT_TOLERANCES.reconstruction:
        raise InvariantViolation(f"Schmidt reconstruction error {err:.3g} exceeds tolerance")
    return out


def squared_schmidt_coefficients(
    state: BipartitePureState, *, length: int | None = None
) -> np.ndarray:
    """Nonincreasing squared Schmidt coefficients, zero-padded to ``length``.

    Without ``length`` the vector has ``min(dim_a, dim_b)`` entries.
    """

    s = scipy.linalg.svdvals(state.matrix)
    lam = np.sort(s.astype(float) ** 2)[::-1]
    n = lam.shape[0] if length is None else int(length)
    if n < lam.shape[0]:
        raise ValueError(f"length {n} is shorter than the Schmidt vector ({lam.shape[0]})")
    out = np.zeros(n, dtype=float)
    out[: lam.shape[0]] = lam
    return out


def local_schmidt_bases(state: BipartitePureState) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Full local unitaries bringing ``state`` to diagonal form.

    Returns ``(s, u, vh)`` with ``s`` of length ``min(dim_a, dim_b)``, ``u``
    (dim_a x dim_a) and ``vh`` (dim_b x dim_b) unitary, and
    ``state.matrix == u[:, :r] @ diag(s) @ vh[:r, :]``.
    """

    u, s, vh = scipy.linalg.svd(state.matrix, full_matrices=True)
    u, vh = _fix_phases(u, vh)
    return s.astype(float), u, vh
