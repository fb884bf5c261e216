from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from loccset.conditions import classify_region
from loccset.configs import RunConfig, SamplerConfig
from loccset.corpus import Fixture, get_fixture, load_default_corpus
from loccset.entanglement import majorization_check
from loccset.errors import (
    CorpusSchemaError,
    DimensionMismatchError,
    InfeasibleTransformationError,
    PartitionError,
    ProtocolStructureError,
    UnsupportedFormError,
)
from loccset.protocols import (
    Leaf,
    ProductKraus,
    Protocol,
    ProtocolNode,
    apply_protocol,
    apply_protocol_to_ensemble,
    build_ip_protocol,
    check_set_transformation,
    distilled_ebits,
    dump_protocol,
    is_supported_form,
    load_protocol,
    parse_protocol,
    product_kraus_feasibility,
    protocol_to_json,
    require_valid,
    subspace_split_protocol,
    synthesize_nielsen_protocol,
    t_transform_chain,
    validate_protocol,
    verify_set_transformation,
)
from loccset.qstate import BipartitePureState, Ensemble, SetPair

H = 1.0 / np.sqrt(2.0)


def diag_state(d: int, coeffs: list[float]) -> BipartitePureState:
    m = np.zeros((d, d), dtype=complex)
    for i, c in enumerate(coeffs):
        m[i, i] = c
    return BipartitePureState(d, d, m.reshape(-1))


def fixture(fixture_id: str) -> Fixture:
    return get_fixture(load_default_corpus(), fixture_id)


def _random_unitary(rng: np.random.Generator, d: int) -> np.ndarray:
    z = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))[None, :]


def _state_with_schmidt(rng: np.random.Generator, lam: np.ndarray) -> BipartitePureState:
    d = lam.shape[0]
    m = _random_unitary(rng, d) @ np.diag(np.sqrt(lam)) @ _random_unitary(rng, d).T
    return BipartitePureState.normalized(d, d, m.reshape(-1))


def _majorized_pair(rng: np.random.Generator, d: int) -> tuple[np.ndarray, np.ndarray]:
    """``(x, y)`` with ``x`` a random convex mix of permutations of ``y``."""

    y = rng.dirichlet(np.ones(d))
    weights = rng.dirichlet(np.ones(3))
    x = sum(w * y[rng.permutation(d)] for w in weights)
    return np.asarray(x), y


def test_validation_reports_defects() -> None:
    half = ProductKraus(np.diag([1.0, 0.0]), np.eye(2))
    bad = Protocol.of(ProtocolNode("A", (half,), (Leaf(),)))
    v = validate_protocol(bad)
    assert not v.valid
    assert v.defects["root"] == pytest.approx(1.0)
    with pytest.raises(ProtocolStructureError, match="completeness defect"):
        require_valid(bad)

    not_unitary = ProductKraus(np.eye(2), np.diag([1.0, 0.5]))
    assert not validate_protocol(Protocol.of(ProtocolNode("B", (not_unitary,)))).valid
    assert validate_protocol(Protocol.identity(3, 2)).valid


def test_structure_errors() -> None:
    ident = ProductKraus.identity(2, 2)
    with pytest.raises(ProtocolStructureError, match="party"):
        ProtocolNode("C", (ident,))
    with pytest.raises(ProtocolStructureError, match="children"):
        ProtocolNode("A", (ident,), (Leaf(), Leaf()))
    with pytest.raises(ProtocolStructureError, match="branch 1"):
        ProtocolNode("A", (ident, ProductKraus.identity(2, 3)))
    inner = ProtocolNode("B", (ident,))
    with pytest.raises(ProtocolStructureError, match="declared depth"):
        Protocol((2, 2), ProtocolNode("A", (ident,), (inner,)), 1)


def test_apply_prunes_zero_branches_and_checks_dims() -> None:
    split = subspace_split_protocol(2, 2, [[0], [1]])
    outcomes = apply_protocol(split, BipartitePureState.basis(0, 1, 2, 2))
    assert len(outcomes) == 1
    assert outcomes[0].probability == pytest.approx(1.0)
    assert outcomes[0].label == "block0"
    bell = apply_protocol(split, diag_state(2, [H, H]))
    assert [o.path for o in bell] == [(0,), (1,)]
    assert sum(o.probability for o in bell) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(DimensionMismatchError):
        apply_protocol(split, BipartitePureState.basis(0, 0, 3, 3))


def test_bundled_ip_protocol_verifies_prop4() -> None:
    fx = fixture("prop4")
    assert fx.protocol is not None and fx.pair is not None
    require_valid(fx.protocol)
    chk = check_set_transformation(fx.protocol, fx.pair)
    assert chk.verified
    for c in chk.inputs:
        assert c.probability_sum == pytest.approx(1.0, abs=1e-8)
        assert c.min_fidelity >= 1.0 - 1e-7
    labels = {o.label for o in apply_protocol(fx.protocol, fx.pair.inputs[0])}
    assert labels == {"φ1"}


def test_verify_rejects_wrong_outputs() -> None:
    fx = fixture("prop4")
    assert fx.protocol is not None and fx.pair is not None
    swapped = SetPair.of(fx.pair.inputs, tuple(reversed(fx.pair.outputs)))
    assert not verify_set_transformation(fx.protocol, swapped)


def test_t_transform_chain_single_step() -> None:
    steps = t_transform_chain(np.array([0.5, 0.5]), np.array([0.8, 0.2]))
    assert len(steps) == 1
    j, k, t, y_next = steps[0]
    assert (j, k) == (0, 1)
    assert 0.0 <= t <= 1.0
    assert np.allclose(y_next, [0.5, 0.5])


def test_nielsen_synthesis_examples() -> None:
    bell = diag_state(2, [H, H])
    target = diag_state(2, [np.sqrt(0.8), np.sqrt(0.2)])
    p = synthesize_nielsen_protocol(bell, target, label="φ1")
    assert verify_set_transformation(p, SetPair.of([bell], [target]))
    assert synthesize_nielsen_protocol(bell, bell).depth == 1
    with pytest.raises(InfeasibleTransformationError, match="Nielsen criterion fails"):
        synthesize_nielsen_protocol(target, bell)
    with pytest.raises(DimensionMismatchError):
        synthesize_nielsen_protocol(bell, diag_state(3, [1.0]))


def test_nielsen_synthesis_random_pairs() -> None:
    rng = np.random.default_rng(2024)
    built = refused = 0
    for k in range(1000):
        d = int(rng.integers(2, 5))
        x, y = _majorized_pair(rng, d)
        if k % 2:
            x, y = y, x
        psi = _state_with_schmidt(rng, x)
        phi = _state_with_schmidt(rng, y)
        if majorization_check(psi, phi).holds:
            p = synthesize_nielsen_protocol(psi, phi)
            assert validate_protocol(p).valid
            assert verify_set_transformation(p, SetPair.of([psi], [phi]), tol=1e-7)
            built += 1
        else:
            with pytest.raises(InfeasibleTransformationError):
                synthesize_nielsen_protocol(psi, phi)
            refused += 1
    assert built >= 400
    assert refused >= 400


def test_ip_protocol_from_partition() -> None:
    fx = fixture("prop4")
    assert fx.pair is not None
    p = build_ip_protocol(fx.pair, [[0, 1], [2, 3]])
    assert p.depth >= 2
    assert verify_set_transformation(p, fx.pair)

    with pytest.raises(PartitionError, match="do not partition"):
        build_ip_protocol(fx.pair, [[0, 1], [1, 2, 3]])
    with pytest.raises(PartitionError, match="share block"):
        build_ip_protocol(fx.pair, [[0, 1, 2, 3]])

    prop2b = fixture("prop2-b").pair
    assert prop2b is not None
    with pytest.raises(InfeasibleTransformationError, match="ψ1, φ1"):
        build_ip_protocol(prop2b, [[0, 1], [2, 3]])


@pytest.mark.parametrize("p1", [0.1, 0.3, 0.7])
def test_subspace_split_distills_first_bell_pair(p1: float) -> None:
    pair = fixture("prop2-b").pair
    assert pair is not None
    rest = (1.0 - p1) / 3.0
    ensemble = Ensemble.of([p1, rest, rest, rest], pair.inputs)
    split = subspace_split_protocol(4, 4, [[0, 1], [2, 3]])
    branches = apply_protocol_to_ensemble(split, ensemble)
    first = next(b for b in branches if b.label == "block0")
    assert first.probability == pytest.approx(p1, abs=1e-9)
    assert first.purity == pytest.approx(1.0, abs=1e-9)
    assert distilled_ebits(split, ensemble) == pytest.approx(p1, abs=1e-9)


def test_subspace_split_one_ebit_for_every_mixture() -> None:
    pair = fixture("prop3-bc").pair
    assert pair is not None
    split = subspace_split_protocol(4, 4, [[0, 1], [2, 3]])
    for p in (0.2, 0.5, 0.9):
        ebits = distilled_ebits(split, Ensemble.of([p, 1.0 - p], pair.inputs))
        assert ebits == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("alpha_sq", [0.51 + 0.04 * k for k in range(12)] + [0.99])
def test_product_kraus_infeasible_for_unequal_weights(alpha_sq: float) -> None:
    a, b = np.sqrt(alpha_sq), np.sqrt(1.0 - alpha_sq)
    pair = SetPair.of(
        [diag_state(2, [H, H]), diag_state(2, [H, -H])],
        [diag_state(2, [a, b]), diag_state(2, [b, -a])],
    )
    v = product_kraus_feasibility(pair)
    assert not v.feasible
    assert v.witness is None
    assert v.obstruction is not None and "ratio sets disjoint" in v.obstruction

    report = classify_region(pair, config=RunConfig(sampler=SamplerConfig(samples=100)))
    assert report.all_yes
    assert report.region == "a ∧ b ∧ c"


def test_product_kraus_feasible_at_equal_weights() -> None:
    pair = SetPair.of(
        [diag_state(2, [H, H]), diag_state(2, [H, -H])],
        [diag_state(2, [H, H]), diag_state(2, [H, -H])],
    )
    v = product_kraus_feasibility(pair)
    assert v.feasible and v.witness is not None
    assert max(v.witness.residuals(pair)) < 1e-9
    k = v.witness.kraus.full()
    assert np.allclose(k.conj().T @ k, np.eye(4), atol=1e-9)
    assert classify_region(pair, config=RunConfig(sampler=SamplerConfig(samples=100))).all_yes


def test_product_kraus_unsupported_form() -> None:
    prop4 = fixture("prop4").pair
    assert prop4 is not None
    assert not is_supported_form(prop4)
    with pytest.raises(UnsupportedFormError):
        product_kraus_feasibility(prop4)
    prop5 = fixture("prop5").pair
    assert prop5 is not None
    assert is_supported_form(prop5)
    assert not product_kraus_feasibility(prop5).feasible


def test_protocol_json_dialect(tmp_path: Path) -> None:
    fx = fixture("prop4")
    assert fx.protocol is not None and fx.pair is not None
    out = tmp_path / "p.json"
    dump_protocol(fx.protocol, out)
    again = load_protocol(out)
    assert again.dims == (4, 4)
    assert again.depth == fx.protocol.depth
    assert verify_set_transformation(again, fx.pair)
    assert protocol_to_json(again)["root"]["party"] == "A"

    with pytest.raises(CorpusSchemaError, match="root"):
        parse_protocol({"dims": [2, 2]})
    bad = {"root": {"party": "A", "branches": [{"a_op": [[1, 0]], "b_op": [[1]]}]}}
    with pytest.raises(CorpusSchemaError, match="square"):
        parse_protocol(bad)
    no_party = {"root": {"party": "Q", "branches": [{"a_op": [[1]], "b_op": [[1]]}]}}
    with pytest.raises(CorpusSchemaError, match="party"):
        parse_protocol(no_party)
