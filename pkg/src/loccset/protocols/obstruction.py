"""Single product-operator feasibility for two maximally entangled inputs.

Inputs must be ``(|e1 f1⟩ ± |e2 f2⟩)/√2`` for orthonormal local bases
``{e1, e2}`` and ``{f1, f2}`` of two qubits. Writing ``a_k = A e_k`` and
``b_k = B f_k``, the requirement ``(A ⊗ B)|ψ_i⟩ = μ_i |φ_i⟩`` is equivalent to

    a_1 ⊗ b_1 = (μ1 φ1 + μ2 φ2) / √2,    a_2 ⊗ b_2 = (μ1 φ1 - μ2 φ2) / √2,

so both right-hand sides must have Schmidt rank at most one. With ``Φ_i`` the
coefficient matrix of ``φ_i`` and ``r = μ1 / μ2`` this reads

    det Φ1 · r² ± c · r + det Φ2 = 0,

where ``c`` is the mixed term of ``det(rΦ1 + Φ2)``. A nondegenerate operator
exists iff the two root sets share a nonzero ``r``. The degenerate cases
``μ1 = 0`` and ``μ2 = 0`` are possible iff ``φ2`` respectively ``φ1`` is a
product state.

Every Kraus operator of a deterministic separable map has to satisfy these
equations for its own ``μ``'s, so when no single operator exists no separable
(hence no LOCC) map performs the transformation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ..configs import DEFAULT_TOLERANCES
from ..errors import InvariantViolation, UnsupportedFormError
from ..qstate import SetPair
from .types import ProductKraus

logger = logging.getLogger(__name__)

RATIO_RTOL = 1e-9


@dataclass(frozen=True, slots=True, eq=False)
class KrausWitness:
    kraus: ProductKraus
    mu1: complex
    mu2: complex

    def residuals(self, pair: SetPair) -> tuple[float, float]:
        """``‖(A ⊗ B)|ψ_i⟩ - μ_i|φ_i⟩‖`` for ``i = 1, 2``."""

        mus = (self.mu1, self.mu2)
        r = [
            float(np.linalg.norm(self.kraus.apply(psi) - mu * phi.amplitudes))
            for psi, phi, mu in zip(pair.inputs, pair.outputs, mus, strict=True)
        ]
        return r[0], r[1]

    def to_dict(self) -> dict:
        def mat(m: np.ndarray) -> list:
            return [[[float(z.real), float(z.imag)] for z in row] for row in m]

        return {
            "a_op": mat(self.kraus.a_op),
            "b_op": mat(self.kraus.b_op),
            "mu1": [float(np.real(self.mu1)), float(np.imag(self.mu1))],
            "mu2": [float(np.real(self.mu2)), float(np.imag(self.mu2))],
        }


@dataclass(frozen=True, slots=True, eq=False)
class FeasibilityVerdict:
    """``ratios_plus`` / ``ratios_minus`` hold the admissible ``μ1/μ2``; ``None`` means any."""

    feasible: bool
    witness: KrausWitness | None
    obstruction: str | None
    ratios_plus: tuple[complex, ...] | None
    ratios_minus: tuple[complex, ...] | None
    mu1_zero_possible: bool
    mu2_zero_possible: bool

    def to_dict(self) -> dict:
        def ratios(rs: tuple[complex, ...] | None) -> list | None:
            return None if rs is None else [[float(r.real), float(r.imag)] for r in rs]

        return {
            "feasible": self.feasible,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "obstruction": self.obstruction,
            "ratios_plus": ratios(self.ratios_plus),
            "ratios_minus": ratios(self.ratios_minus),
            "mu1_zero_possible": self.mu1_zero_possible,
            "mu2_zero_possible": self.mu2_zero_possible,
        }


def _factor(m: np.ndarray) -> tuple[np.ndarray, np.ndarray, float, float]:
    """Best rank-one factors ``m ≈ a bᵀ`` and the two singular values."""

    u, s, vh = scipy.linalg.svd(m)
    root = np.sqrt(s[0])
    return root * u[:, 0], root * vh[0, :], float(s[0]), float(s[1])


def _input_bases(pair: SetPair, tol: float) -> tuple[np.ndarray, np.ndarray]:
    """``E = [e1 e2]`` and ``F = [f1 f2]`` for inputs of the supported form."""

    if pair.n != 2:
        raise UnsupportedFormError(f"need exactly two input/output pairs, got {pair.n}")
    if pair.input_dims != (2, 2) or pair.output_dims != (2, 2):
        raise UnsupportedFormError("inputs and outputs must be two-qubit states")

    psi1, psi2 = (s.matrix for s in pair.inputs)
    e1, f1, s1, r1 = _factor((psi1 + psi2) / np.sqrt(2.0))
    e2, f2, s2, r2 = _factor((psi1 - psi2) / np.sqrt(2.0))
    product = abs(s1 - 1.0) <= tol and abs(s2 - 1.0) <= tol and r1 <= tol and r2 <= tol
    orthogonal = abs(np.vdot(e1, e2)) <= tol and abs(np.vdot(f1, f2)) <= tol
    if not (product and orthogonal):
        raise UnsupportedFormError(
            "inputs must be (|e1 f1⟩ + |e2 f2⟩)/√2 and (|e1 f1⟩ - |e2 f2⟩)/√2 "
            "for orthonormal local bases"
        )
    return np.stack([e1, e2], axis=1), np.stack([f1, f2], axis=1)


def _mixed_term(p1: np.ndarray, p2: np.ndarray) -> complex:
    return complex(
        p1[0, 0] * p2[1, 1] + p2[0, 0] * p1[1, 1] - p1[0, 1] * p2[1, 0] - p2[0, 1] * p1[1, 0]
    )


def _nonzero_roots(coeffs: list[complex], tol: float) -> tuple[complex, ...] | None:
    """Nonzero roots of a polynomial; ``None`` when it vanishes identically."""

    c = np.asarray(coeffs, dtype=complex)
    if np.all(np.abs(c) <= tol):
        return None
    nz = np.flatnonzero(np.abs(c) > tol)
    c = c[nz[0] :]
    roots = np.roots(c) if c.shape[0] > 1 else np.array([], dtype=complex)
    return tuple(complex(r) for r in roots if abs(r) > tol)


def _close(r: complex, s: complex) -> bool:
    return abs(r - s) <= RATIO_RTOL * max(1.0, abs(r), abs(s))


def _common_ratio(
    plus: tuple[complex, ...] | None, minus: tuple[complex, ...] | None
) -> complex | None:
    if plus is None and minus is None:
        candidates: tuple[complex, ...] = (1.0 + 0.0j,)
    elif plus is None:
        candidates = minus or ()
    elif minus is None:
        candidates = plus
    else:
        candidates = tuple(r for r in plus if any(_close(r, s) for s in minus))
    if not candidates:
        return None
    return min(candidates, key=lambda r: abs(r - 1.0))


def _fmt(rs: tuple[complex, ...] | None) -> str:
    if rs is None:
        return "any"

    def one(r: complex) -> str:
        return f"{r.real:.6g}" if abs(r.imag) <= 1e-12 else f"{r.real:.6g}{r.imag:+.6g}j"

    return "{" + ", ".join(one(r) for r in sorted(rs, key=lambda z: (z.real, z.imag))) + "}"


def product_kraus_feasibility(
    pair: SetPair,
    *,
    tol: float = DEFAULT_TOLERANCES.comparison,
    verify_tol: float = DEFAULT_TOLERANCES.verify,
) -> FeasibilityVerdict:
    """Whether one product operator maps both inputs onto multiples of their outputs.

    Raises :class:`UnsupportedFormError` outside the two-qubit maximally
    entangled input family described in the module docstring.
    """

    e_basis, f_basis = _input_bases(pair, tol)
    phi1, phi2 = (s.matrix for s in pair.outputs)
    d1 = complex(np.linalg.det(phi1))
    d2 = complex(np.linalg.det(phi2))
    c = _mixed_term(phi1, phi2)

    plus = _nonzero_roots([d1, c, d2], tol)
    minus = _nonzero_roots([d1, -c, d2], tol)
    mu2_zero = abs(d1) <= tol
    mu1_zero = abs(d2) <= tol
    logger.debug("ratio roots plus=%s minus=%s", _fmt(plus), _fmt(minus))

    r = _common_ratio(plus, minus)
    if r is None:
        degenerate = [
            "μ1 = 0 possible (φ2 is product)" if mu1_zero else "μ1 = 0 needs φ2 product",
            "μ2 = 0 possible (φ1 is product)" if mu2_zero else "μ2 = 0 needs φ1 product",
        ]
        return FeasibilityVerdict(
            feasible=False,
            witness=None,
            obstruction=(
                f"ratio sets disjoint: μ1/μ2 ∈ {_fmt(plus)} from the first product constraint "
                f"but ∈ {_fmt(minus)} from the second; " + "; ".join(degenerate)
            ),
            ratios_plus=plus,
            ratios_minus=minus,
            mu1_zero_possible=mu1_zero,
            mu2_zero_possible=mu2_zero,
        )

    mu1, mu2 = complex(r), 1.0 + 0.0j
    a1, b1, _, _ = _factor((mu1 * phi1 + mu2 * phi2) / np.sqrt(2.0))
    a2, b2, _, _ = _factor((mu1 * phi1 - mu2 * phi2) / np.sqrt(2.0))
    a_op = np.stack([a1, a2], axis=1) @ e_basis.conj().T
    b_op = np.stack([b1, b2], axis=1) @ f_basis.conj().T
    witness = KrausWitness(ProductKraus(a_op, b_op), mu1, mu2)

    res = witness.residuals(pair)
    if max(res) > verify_tol:
        raise InvariantViolation(f"product-Kraus witness does not replay (residuals {res})")
    return FeasibilityVerdict(
        feasible=True,
        witness=witness,
        obstruction=None,
        ratios_plus=plus,
        ratios_minus=minus,
        mu1_zero_possible=mu1_zero,
        mu2_zero_possible=mu2_zero,
    )


def is_supported_form(pair: SetPair, *, tol: float = DEFAULT_TOLERANCES.comparison) -> bool:
    try:
        _input_bases(pair, tol)
    except UnsupportedFormError:
        return False
    return True

