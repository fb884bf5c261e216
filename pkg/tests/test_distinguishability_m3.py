from __future__ import annotations

import logging

import numpy as np
import pytest

from loccset.distinguishability import (
    CLASSES,
    Verdict,
    class_distinguishable,
    class_transformable,
    default_known_facts,
    find_computational_grouping,
    is_computational_product,
    is_product,
    locc_distinguishable,
    pairwise_orthogonal,
    parse_known_facts,
    separation_pair,
)
from loccset.errors import CorpusSchemaError, KnownFactsError, UnknownFixtureError
from loccset.qstate import BipartitePureState

H = 1.0 / np.sqrt(2.0)


def state(dim_a: int, dim_b: int, terms: dict[tuple[int, int], complex]) -> BipartitePureState:
    v = np.zeros(dim_a * dim_b, dtype=complex)
    for (i, j), a in terms.items():
        v[i * dim_b + j] = a
    return BipartitePureState(dim_a, dim_b, v)


def ket(i: int, j: int, d: int = 2) -> BipartitePureState:
    return BipartitePureState.basis(i, j, d, d)


BELL_P = state(2, 2, {(0, 0): H, (1, 1): H})
BELL_M = state(2, 2, {(0, 0): H, (1, 1): -H})


def test_orthogonality_and_product_tests() -> None:
    assert pairwise_orthogonal([BELL_P, BELL_M])
    assert not pairwise_orthogonal([BELL_P, ket(0, 0)])
    assert pairwise_orthogonal([ket(i, j) for i in range(2) for j in range(2)])
    assert is_product(ket(0, 1))
    assert not is_product(BELL_P)
    assert not is_product(state(2, 2, {(0, 0): np.sqrt(0.8), (1, 1): np.sqrt(0.2)}))
    plus_zero = state(2, 2, {(0, 0): H, (1, 0): H})
    assert is_product(plus_zero)
    assert not is_computational_product(plus_zero)


def test_computational_grouping_is_the_finest_one() -> None:
    d = 9
    diag = [state(d, d, {(i, i): H, ((i + 1) % d, (i + 1) % d): H}) for i in range(0, d - 1, 2)]
    off = [ket(i, (i + 1) % d, d) for i in range(d)]
    blocks = find_computational_grouping(diag + off)
    assert blocks == (tuple((i,) for i in range(d)), tuple((j,) for j in range(d)))
    assert locc_distinguishable(diag + off).rule == "R3b"

    shared = state(d, d, {(0, 0): H, (0, 1): H})
    assert find_computational_grouping([shared, ket(0, 1, d), ket(2, 2, d)]) is None


def test_rule_cascade_on_worked_examples() -> None:
    non_orth = locc_distinguishable([BELL_P, ket(0, 0)])
    assert non_orth.value is Verdict.NO and non_orth.rule == "R1"

    two = locc_distinguishable([BELL_P, BELL_M])
    assert two.is_yes and two.rule == "R2"

    basis = locc_distinguishable([ket(0, 0), ket(0, 1), ket(1, 1)])
    assert basis.is_yes and basis.rule == "R3"

    inputs = locc_distinguishable([BELL_P, BELL_M, ket(0, 1)])
    assert inputs.is_no and inputs.rule == "R4"
    assert "Walgate-Hardy" in inputs.justification

    outputs = locc_distinguishable([state(2, 2, {(0, 1): H, (1, 0): H}), ket(0, 0), ket(1, 1)])
    assert outputs.is_yes and outputs.rule == "R4"


def test_computational_grouping_decides_three_term_outputs() -> None:
    phi1 = state(4, 4, {(0, 0): np.sqrt(0.8), (1, 1): np.sqrt(0.1), (2, 2): np.sqrt(0.1)})
    states = [phi1, ket(1, 3, 4), ket(2, 3, 4), ket(3, 3, 4)]
    v = locc_distinguishable(states)
    assert v.is_yes and v.rule == "R3b"
    assert "computational basis" in v.justification
    assert find_computational_grouping(states) is not None


def test_listed_indistinguishable_subset() -> None:
    def s(terms: dict[tuple[int, int], complex]) -> BipartitePureState:
        return state(4, 4, terms)

    states = [
        s({(0, 0): H, (1, 1): H}),
        s({(2, 2): H, (3, 3): H}),
        s({(2, 2): H, (3, 3): -H}),
        s({(2, 3): H, (3, 2): H}),
    ]
    v = locc_distinguishable(states)
    assert v.is_no and v.rule == "R5"
    assert "three-bell-block" in v.justification
    assert locc_distinguishable(states[1:]).rule == "R5"

    bell = locc_distinguishable(default_known_facts().states("bell-basis"))
    assert bell.is_no and bell.rule == "R5"


def test_undecided_set_is_unknown() -> None:
    states = [
        state(3, 3, {(0, 0): H, (1, 1): H}),
        state(3, 3, {(0, 0): H, (1, 1): -H}),
        BipartitePureState.basis(2, 2, 3, 3),
    ]
    v = locc_distinguishable(states, indistinguishable_sets=[])
    assert v.is_unknown and v.rule == "R6"


def test_known_facts_and_class_closure(caplog: pytest.LogCaptureFixture) -> None:
    assert class_distinguishable("nlwe-basis", "LOCC").is_no
    assert class_distinguishable("nlwe-basis", "SEP").is_yes
    assert class_distinguishable("yu-duan", "SEP").is_no
    assert class_distinguishable("yu-duan", "PPT").is_yes
    assert class_distinguishable("bell-basis", "PPT").is_no
    assert class_distinguishable("bell-basis", "ALL").is_yes

    inherited = class_distinguishable("nlwe-basis", "PPT")
    assert inherited.is_yes and "SEP ⊂ PPT" in inherited.justification
    assert class_distinguishable("yu-duan", "LOCC").is_no
    assert class_distinguishable("bell-basis", "SEP").is_no

    with caplog.at_level(logging.WARNING):
        undecided = class_distinguishable("three-bell-block", "SEP")
    assert undecided.is_unknown
    assert "no known fact" in caplog.text

    with pytest.raises(UnknownFixtureError):
        class_distinguishable("no-such-set", "LOCC")
    with pytest.raises(ValueError, match="class must be one of"):
        class_distinguishable("bell-basis", "QC")


def test_known_facts_monotone_on_load() -> None:
    table = default_known_facts()
    for fid in table.fixture_ids:
        verdicts = [table.lookup(fid, c) for c in CLASSES]
        # once distinguishable under a class, distinguishable under every larger one
        seen_yes = False
        for v in verdicts:
            if seen_yes:
                assert not v.is_no
            seen_yes = seen_yes or v.is_yes


def test_non_monotone_table_is_rejected() -> None:
    doc = {
        "facts": [
            {"fixture_id": "x", "class": "LOCC", "distinguishable": True, "source": "a"},
            {"fixture_id": "x", "class": "PPT", "distinguishable": False, "source": "b"},
        ]
    }
    with pytest.raises(KnownFactsError, match="LOCC ⊂ SEP ⊂ PPT ⊂ ALL"):
        parse_known_facts(doc)
    with pytest.raises(CorpusSchemaError, match="missing key 'source'"):
        parse_known_facts({"facts": [{"fixture_id": "x", "class": "SEP", "distinguishable": 1}]})


def test_separation_pairs_follow_discrimination() -> None:
    pair = separation_pair("bell-basis")
    assert pair.n == 4
    expected = [ket(0, 0), ket(0, 1), ket(1, 0), ket(1, 1)]
    for got, want in zip(pair.outputs, expected, strict=True):
        assert np.allclose(got.amplitudes, want.amplitudes)

    assert class_transformable("yu-duan", "SEP").is_no
    assert class_transformable("yu-duan", "PPT").is_yes
    assert class_transformable("nlwe-basis", "LOCC").is_no
    assert class_transformable("nlwe-basis", "SEP").is_yes
    assert class_transformable("bell-basis", "PPT").rule == "identify-and-prepare"
