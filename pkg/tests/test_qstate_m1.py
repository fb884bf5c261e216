from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loccset.errors import DimensionMismatchError, NormalizationError
from loccset.qstate import (
    BipartitePureState,
    DensityOperator,
    Ensemble,
    SetPair,
    ensemble_density,
    fidelity_mixed,
    fidelity_pure,
    local_schmidt_bases,
    partial_trace,
    partial_transpose,
    schmidt_decompose,
    squared_schmidt_coefficients,
    trace_norm,
)

H = 1.0 / np.sqrt(2.0)


def bell_plus() -> BipartitePureState:
    return BipartitePureState(2, 2, np.array([H, 0, 0, H]))


def random_state(rng: np.random.Generator, dim_a: int, dim_b: int) -> BipartitePureState:
    v = rng.normal(size=dim_a * dim_b) + 1j * rng.normal(size=dim_a * dim_b)
    return BipartitePureState.normalized(dim_a, dim_b, v)


def test_state_rejects_unnormalised_and_wrong_length() -> None:
    with pytest.raises(NormalizationError, match="not normalised"):
        BipartitePureState(2, 2, np.array([1.0, 1.0, 0.0, 0.0]))
    with pytest.raises(NormalizationError, match="degenerate"):
        BipartitePureState.normalized(2, 2, np.zeros(4))
    with pytest.raises(DimensionMismatchError, match="expected dim_a\\*dim_b"):
        BipartitePureState(2, 3, np.array([1.0, 0.0, 0.0, 0.0]))
    with pytest.raises(DimensionMismatchError, match="outside"):
        BipartitePureState.basis(2, 0, 2, 2)


def test_state_is_immutable() -> None:
    s = bell_plus()
    with pytest.raises(ValueError):
        s.amplitudes[0] = 0.0


def test_row_major_layout() -> None:
    s = BipartitePureState.basis(1, 2, 2, 3)
    assert s.amplitudes[1 * 3 + 2] == 1.0
    assert s.matrix[1, 2] == 1.0


def test_schmidt_bell_and_product() -> None:
    d = schmidt_decompose(bell_plus())
    assert d.rank == 2
    assert np.allclose(d.coefficients, [H, H])
    assert np.allclose(d.reconstruct(), bell_plus().amplitudes)

    prod = BipartitePureState.basis(0, 1, 2, 2)
    assert schmidt_decompose(prod).rank == 1
    assert np.allclose(squared_schmidt_coefficients(prod), [1.0, 0.0])


def test_squared_coefficients_padding() -> None:
    lam = squared_schmidt_coefficients(bell_plus(), length=4)
    assert lam.shape == (4,)
    assert np.allclose(lam, [0.5, 0.5, 0.0, 0.0])
    with pytest.raises(ValueError, match="shorter"):
        squared_schmidt_coefficients(bell_plus(), length=1)


@settings(max_examples=1000, deadline=None)
@given(
    seed=st.integers(min_value=0, max_value=2**31 - 1),
    dim_a=st.integers(min_value=1, max_value=4),
    dim_b=st.integers(min_value=1, max_value=4),
)
def test_schmidt_invariants_random(seed: int, dim_a: int, dim_b: int) -> None:
    s = random_state(np.random.default_rng(seed), dim_a, dim_b)
    d = schmidt_decompose(s)
    c = d.coefficients
    assert np.all(np.diff(c) <= 1e-12)
    assert abs(float(np.sum(c**2)) - 1.0) < 1e-9
    assert np.linalg.norm(d.reconstruct() - s.amplitudes) < 1e-8
    assert np.allclose(d.left_vectors.conj().T @ d.left_vectors, np.eye(d.rank), atol=1e-9)

    sv, u, vh = local_schmidt_bases(s)
    r = sv.shape[0]
    assert np.allclose(u[:, :r] @ np.diag(sv) @ vh[:r, :], s.matrix, atol=1e-9)


def test_fidelities_and_trace_norm() -> None:
    a = bell_plus()
    b = BipartitePureState.basis(0, 0, 2, 2)
    assert fidelity_pure(a, b) == pytest.approx(H)
    assert fidelity_mixed(a.projector(), b.projector()) == pytest.approx(H, abs=1e-7)
    assert fidelity_pure(a, a) == pytest.approx(1.0)
    assert trace_norm(np.diag([0.5, -0.25])) == pytest.approx(0.75)
    with pytest.raises(DimensionMismatchError):
        trace_norm(np.zeros((2, 3)))


def test_partial_operations_on_bell() -> None:
    rho = bell_plus().projector()
    assert np.allclose(partial_trace(rho, "B"), np.eye(2) / 2)
    assert np.allclose(partial_trace(rho, "A"), np.eye(2) / 2)
    ev = np.linalg.eigvalsh(partial_transpose(rho))
    assert ev[0] == pytest.approx(-0.5)
    with pytest.raises(ValueError, match="subsystem"):
        partial_trace(rho, "C")  # type: ignore[arg-type]


def test_density_validation() -> None:
    with pytest.raises(NormalizationError, match="trace"):
        DensityOperator(1, 2, np.eye(2))
    with pytest.raises(NormalizationError, match="Hermitian"):
        DensityOperator(1, 2, np.array([[0.5, 1.0], [0.0, 0.5]]))
    with pytest.raises(NormalizationError, match="PSD"):
        DensityOperator(1, 2, np.diag([1.5, -0.5]))


def test_ensemble_density_and_validation() -> None:
    e = Ensemble.of([0.5, 0.5], [BipartitePureState.basis(0, 0, 2, 2), bell_plus()])
    rho = ensemble_density(e)
    assert np.trace(rho.matrix).real == pytest.approx(1.0)
    assert rho.matrix[0, 0].real == pytest.approx(0.75)
    with pytest.raises(NormalizationError, match="sum"):
        Ensemble.of([0.5, 0.4], [bell_plus(), bell_plus()])
    with pytest.raises(NormalizationError, match="\\(0, 1\\]"):
        Ensemble.of([1.0, 0.0], [bell_plus(), bell_plus()])


def test_set_pair_validation() -> None:
    b = bell_plus()
    with pytest.raises(ValueError, match="2 inputs but 1 outputs"):
        SetPair.of([b, b], [b])
    with pytest.raises(ValueError, match="at least one"):
        SetPair.of([], [])
    with pytest.raises(DimensionMismatchError, match="inputs\\[1\\]"):
        SetPair.of([b, BipartitePureState.basis(0, 0, 2, 3)], [b, b])
    pair = SetPair.of([b], [BipartitePureState.basis(0, 0, 3, 3)])
    assert pair.n == 1
    assert pair.output_dims == (3, 3)


def random_density(rng: np.random.Generator, dim_a: int, dim_b: int) -> DensityOperator:
    k = int(rng.integers(1, 4))
    probs = rng.dirichlet(np.ones(k))
    states = [random_state(rng, dim_a, dim_b) for _ in range(k)]
    return ensemble_density(Ensemble.of(list(probs), states))


def random_unitary(rng: np.random.Generator, d: int) -> np.ndarray:
    z = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))[None, :]


def test_partial_transpose_involution_random() -> None:
    rng = np.random.default_rng(3)
    for _ in range(1000):
        dim_a, dim_b = (int(x) for x in rng.integers(1, 5, size=2))
        rho = random_density(rng, dim_a, dim_b)
        dims = (dim_a, dim_b)
        for side in ("A", "B"):
            t = partial_transpose(rho, side)
            assert np.allclose(partial_transpose(t, side, dims=dims), rho.matrix, atol=1e-12)
            assert np.trace(t) == pytest.approx(1.0, abs=1e-9)
            assert np.allclose(t, t.conj().T, atol=1e-12)
        both = partial_transpose(partial_transpose(rho, "A"), "B", dims=dims)
        assert np.allclose(both, rho.matrix.T, atol=1e-12)


def test_trace_norm_unitary_invariance_random() -> None:
    rng = np.random.default_rng(4)
    for _ in range(1000):
        d = int(rng.integers(1, 9))
        m = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        u, v = random_unitary(rng, d), random_unitary(rng, d)
        assert trace_norm(u @ m @ v) == pytest.approx(trace_norm(m), rel=1e-9)
        assert trace_norm(m) >= 0.0


def test_fidelity_mixed_symmetric_and_bounded_random() -> None:
    rng = np.random.default_rng(5)
    for _ in range(1000):
        dim_a, dim_b = (int(x) for x in rng.integers(1, 4, size=2))
        r, s = random_density(rng, dim_a, dim_b), random_density(rng, dim_a, dim_b)
        f = fidelity_mixed(r, s)
        assert 0.0 <= f <= 1.0
        assert fidelity_mixed(s, r) == pytest.approx(f, abs=1e-9)

        a, b = random_state(rng, dim_a, dim_b), random_state(rng, dim_a, dim_b)
        f_pure = fidelity_pure(a, b)
        assert 0.0 <= f_pure <= 1.0
        assert fidelity_mixed(a.projector(), b.projector()) == pytest.approx(f_pure, abs=1e-6)
