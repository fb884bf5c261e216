from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loccset.entanglement import (
    MeasureValue,
    applicable_measures,
    binary_entropy,
    concurrence_2q,
    eof_2q,
    eof_from_concurrence,
    majorization_check,
    majorizes,
    measure_value,
    negativity,
    pure_state_entropy,
)
from loccset.errors import DimensionMismatchError
from loccset.qstate import BipartitePureState, DensityOperator, Ensemble, ensemble_density

H = 1.0 / np.sqrt(2.0)
ALPHA = np.sqrt(0.8)
BETA = np.sqrt(0.2)


def state(dim_a: int, dim_b: int, terms: dict[tuple[int, int], complex]) -> BipartitePureState:
    v = np.zeros(dim_a * dim_b, dtype=complex)
    for (i, j), a in terms.items():
        v[i * dim_b + j] = a
    return BipartitePureState(dim_a, dim_b, v)


def mixture(probs: list[float], states: list[BipartitePureState]) -> DensityOperator:
    return ensemble_density(Ensemble.of(probs, states))


BELL_P = state(2, 2, {(0, 0): H, (1, 1): H})
BELL_M = state(2, 2, {(0, 0): H, (1, 1): -H})


def test_nielsen_bell_to_three_term_fails_at_two() -> None:
    bell4 = state(4, 4, {(0, 0): H, (1, 1): H})
    phi1 = state(4, 4, {(0, 0): np.sqrt(0.8), (1, 1): np.sqrt(0.1), (2, 2): np.sqrt(0.1)})
    v = majorization_check(bell4, phi1)
    assert not v.holds
    assert v.first_violating_l == 2
    assert v.margin == pytest.approx(-0.1)


def test_nielsen_pass_cases() -> None:
    target = state(2, 2, {(0, 0): ALPHA, (1, 1): BETA})
    assert majorization_check(BELL_P, target).holds
    assert majorization_check(BELL_P, BELL_P).holds
    assert majorization_check(BELL_P, state(2, 2, {(0, 1): 1.0})).holds
    assert not majorization_check(state(2, 2, {(0, 1): 1.0}), BELL_P).holds


def test_nielsen_pads_different_local_dims() -> None:
    v = majorization_check(state(2, 2, {(0, 0): 1.0}), state(3, 3, {(0, 0): 1.0}))
    assert v.holds
    assert len(v.partial_sums_in) == 3


def test_majorizes_vectors() -> None:
    assert majorizes(np.array([0.5, 0.5]), np.array([0.8, 0.2]))
    assert not majorizes(np.array([0.8, 0.2]), np.array([0.5, 0.5]))
    assert majorizes(np.array([0.25, 0.25, 0.25, 0.25]), np.array([1.0]))


def test_measures_on_bell_and_product() -> None:
    rho = BELL_P.projector()
    assert concurrence_2q(rho) == pytest.approx(1.0, abs=1e-7)
    assert negativity(rho) == pytest.approx(0.5, abs=1e-9)
    assert eof_2q(rho) == pytest.approx(1.0, abs=1e-6)
    prod = state(2, 2, {(0, 1): 1.0}).projector()
    assert concurrence_2q(prod) == pytest.approx(0.0, abs=1e-7)
    assert negativity(prod) == pytest.approx(0.0, abs=1e-12)
    assert eof_2q(prod) == pytest.approx(0.0, abs=1e-6)


def test_pure_state_entropy() -> None:
    assert pure_state_entropy(BELL_P) == pytest.approx(1.0)
    assert pure_state_entropy(state(2, 2, {(1, 0): 1.0})) == pytest.approx(0.0)
    e = pure_state_entropy(state(2, 2, {(0, 0): ALPHA, (1, 1): BETA}))
    assert 0.0 < e < 1.0
    assert e == pytest.approx(binary_entropy(0.8))


def test_concurrence_closed_forms_on_bell_mixtures() -> None:
    phi1 = state(2, 2, {(0, 0): ALPHA, (1, 1): BETA})
    phi2 = state(2, 2, {(0, 0): BETA, (1, 1): -ALPHA})
    for k in range(1, 100):
        p = k / 100
        c_in = concurrence_2q(mixture([p, 1 - p], [BELL_P, BELL_M]))
        c_out = concurrence_2q(mixture([p, 1 - p], [phi1, phi2]))
        assert c_in == pytest.approx(abs(1 - 2 * p), abs=1e-7)
        assert c_out == pytest.approx(2 * ALPHA * BETA * abs(1 - 2 * p), abs=1e-7)
    assert concurrence_2q(mixture([0.3, 0.7], [BELL_P, BELL_M])) == pytest.approx(0.4, abs=1e-7)


def test_entanglement_onset_at_four_ninths() -> None:
    psi = [BELL_P, BELL_M, state(2, 2, {(0, 1): 1.0})]
    phi = [
        state(2, 2, {(0, 1): H, (1, 0): H}),
        state(2, 2, {(0, 0): 1.0}),
        state(2, 2, {(1, 1): 1.0}),
    ]
    onset = None
    for k in range(1, 5000):
        p = k / 10000
        if negativity(mixture([p, p, 1 - 2 * p], psi)) > 1e-9:
            raise AssertionError(f"input mixture entangled at p={p}")
        if onset is None and negativity(mixture([p, p, 1 - 2 * p], phi)) > 1e-9:
            onset = p
    assert onset is not None
    assert abs(onset - 4 / 9) < 1e-3
    assert negativity(mixture([0.47, 0.47, 0.06], phi)) > 0.0


def test_eof_monotone_in_concurrence() -> None:
    cs = np.linspace(0.0, 1.0, 100)
    values = [eof_from_concurrence(c) for c in cs]
    assert values[0] == pytest.approx(0.0)
    assert values[-1] == pytest.approx(1.0)
    assert all(b > a for a, b in zip(values[1:], values[2:], strict=False))


def test_two_qubit_measures_reject_other_dims() -> None:
    rho = state(3, 3, {(0, 0): 1.0}).projector()
    with pytest.raises(DimensionMismatchError, match="dims \\(2, 2\\)"):
        concurrence_2q(rho)
    assert negativity(rho) == pytest.approx(0.0)
    assert applicable_measures((3, 3)) == ("negativity",)
    assert applicable_measures((2, 2)) == ("negativity", "concurrence", "eof_2q")
    with pytest.raises(ValueError, match="unknown measure"):
        measure_value("squashed", rho)  # type: ignore[arg-type]


def test_measure_value_validates_name_and_sign() -> None:
    v = measure_value("negativity", BELL_P.projector())
    assert v.measure == "negativity"
    assert v.value == pytest.approx(0.5)
    with pytest.raises(ValueError, match="measure must be one of"):
        MeasureValue("squashed", 0.1)  # type: ignore[arg-type]
    with pytest.raises(ValueError, match="finite and >= 0"):
        MeasureValue("concurrence", -0.2)
    with pytest.raises(ValueError, match="finite and >= 0"):
        MeasureValue("eof_2q", float("nan"))


def _random_pure(rng: np.random.Generator) -> BipartitePureState:
    v = rng.normal(size=4) + 1j * rng.normal(size=4)
    return BipartitePureState.normalized(2, 2, v)


def _random_unitary(rng: np.random.Generator, d: int) -> np.ndarray:
    z = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))[None, :]


@settings(max_examples=1000, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**31 - 1))
def test_concurrence_and_negativity_vanish_together(seed: int) -> None:
    rng = np.random.default_rng(seed)
    k = int(rng.integers(1, 4))
    probs = rng.dirichlet(np.ones(k))
    rho = mixture(list(probs), [_random_pure(rng) for _ in range(k)])
    c = concurrence_2q(rho)
    n = negativity(rho)
    if c > 1e-3:
        assert n > 1e-9
    if n > 1e-7:
        assert c > 1e-7


def test_negativity_local_unitary_invariance_random() -> None:
    rng = np.random.default_rng(7)
    for _ in range(1000):
        rho = mixture([0.6, 0.4], [_random_pure(rng), _random_pure(rng)])
        u = np.kron(_random_unitary(rng, 2), _random_unitary(rng, 2))
        rotated = DensityOperator(2, 2, u @ rho.matrix @ u.conj().T)
        assert negativity(rotated) == pytest.approx(negativity(rho), abs=1e-9)


def test_concurrence_is_stable_on_rank_deficient_mixtures() -> None:
    rng = np.random.default_rng(8)
    ket01 = state(2, 2, {(0, 1): 1.0})
    for p in np.linspace(0.05, 0.95, 19):
        rho = mixture([float(p), float(1.0 - p)], [BELL_P, ket01])
        assert concurrence_2q(rho) == pytest.approx(p, abs=1e-12)
        for _ in range(20):
            u = np.kron(_random_unitary(rng, 2), _random_unitary(rng, 2))
            rotated = DensityOperator(2, 2, u @ rho.matrix @ u.conj().T)
            assert concurrence_2q(rotated) == pytest.approx(p, abs=1e-12)

    for _ in range(200):
        states = [_random_pure(rng) for _ in range(3)]
        rho = mixture([0.5, 0.3, 0.2], states)
        u = np.kron(_random_unitary(rng, 2), _random_unitary(rng, 2))
        moved = [BipartitePureState(2, 2, u @ s.amplitudes) for s in states]
        rotated = mixture([0.5, 0.3, 0.2], moved)
        assert concurrence_2q(rotated) == pytest.approx(concurrence_2q(rho), abs=1e-12)


def _t_transform(rng: np.random.Generator, v: np.ndarray) -> np.ndarray:
    i, j = rng.choice(v.shape[0], size=2, replace=False)
    t = rng.uniform()
    out = v.copy()
    out[i], out[j] = t * v[i] + (1 - t) * v[j], t * v[j] + (1 - t) * v[i]
    return out


def test_majorization_is_transitive_random() -> None:
    rng = np.random.default_rng(21)
    for _ in range(1000):
        d = int(rng.integers(2, 7))
        z = rng.dirichlet(np.ones(d))
        y = _t_transform(rng, z)
        x = _t_transform(rng, y)
        assert majorizes(x, y)
        assert majorizes(y, z)
        assert majorizes(x, z)

        a, b, c = (rng.dirichlet(np.ones(d)) for _ in range(3))
        if majorizes(a, b) and majorizes(b, c):
            assert majorizes(a, c)


def test_maximally_entangled_state_is_majorized_by_every_state() -> None:
    rng = np.random.default_rng(22)
    for _ in range(1000):
        d = int(rng.integers(2, 5))
        max_ent = state(d, d, {(i, i): 1.0 / np.sqrt(d) for i in range(d)})
        v = rng.normal(size=d * d) + 1j * rng.normal(size=d * d)
        target = BipartitePureState.normalized(d, d, v)
        assert majorization_check(max_ent, target).holds
        assert majorizes(np.full(d, 1.0 / d), rng.dirichlet(np.ones(d)))
