from __future__ import annotations

import json
from pathlib import Path

from click.testing import CliRunner, Result
from typer.main import get_command

from loccset.cli import app
from loccset.corpus import default_corpus_path
from loccset.protocols import load_protocol

H = 2**-0.5
BELL = {"dims": [2, 2], "amplitudes": [H, 0, 0, H]}
SKEWED = {"dims": [2, 2], "amplitudes": [0.8**0.5, 0, 0, 0.2**0.5]}


def invoke(*args: str) -> Result:
    return CliRunner().invoke(get_command(app), list(args))


def corpus_pair(fixture_id: str) -> dict:
    doc = json.loads(default_corpus_path().read_text(encoding="utf-8"))
    return next(f["pair"] for f in doc["fixtures"] if f["id"] == fixture_id)


def write_json(path: Path, doc: object) -> str:
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def test_version_command() -> None:
    res = invoke("version")
    assert res.exit_code == 0
    assert res.stdout.strip() != ""


def test_classify_fixture_region() -> None:
    res = invoke("classify", "--fixture", "prop2-a", "--samples", "0")
    assert res.exit_code == 0, res.output
    assert "region: a ∧ ¬b ∧ ¬c" in res.stdout
    assert res.stdout.startswith("loccset ")


def test_classify_notes_insufficient_conditions() -> None:
    res = invoke("classify", "--fixture", "prop5", "--samples", "0")
    assert res.exit_code == 0, res.output
    assert "region: a ∧ b ∧ c" in res.stdout
    assert "LOCC still impossible" in res.stdout


def test_classify_json_is_deterministic() -> None:
    args = ("classify", "--fixture", "prop3-ac", "--samples", "50", "--format", "json")
    first, second = invoke(*args), invoke(*args)
    assert first.exit_code == 0, first.output
    assert first.stdout == second.stdout
    doc = json.loads(first.stdout)
    assert doc["header"]["tool"] == "loccset"
    assert doc["header"]["seed"] == 0
    assert doc["report"]["region"] == "a ∧ ¬b ∧ c"
    assert doc["note"] is None


def test_classify_input_errors(tmp_path: Path) -> None:
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    res = invoke("classify", "--pair", str(bad))
    assert res.exit_code == 2
    assert "error:" in res.output

    assert invoke("classify", "--pair", str(tmp_path / "nope.json")).exit_code == 2
    assert invoke("classify", "--fixture", "bell-basis").exit_code == 2
    assert invoke("classify").exit_code == 2
    assert invoke("classify", "--fixture", "prop4", "--format", "xml").exit_code == 2


def test_nielsen_command(tmp_path: Path) -> None:
    ok = write_json(tmp_path / "ok.json", {"input": BELL, "output": SKEWED})
    res = invoke("nielsen", "--states", ok)
    assert res.exit_code == 0, res.output
    assert "PASS" in res.stdout

    fail = write_json(tmp_path / "fail.json", {"input": SKEWED, "output": BELL})
    res = invoke("nielsen", "--states", fail)
    assert res.exit_code == 0
    assert "FAIL at l=1" in res.stdout


def test_pairwise_command() -> None:
    res = invoke("pairwise", "--fixture", "prop3-ab", "--format", "json")
    assert res.exit_code == 0, res.output
    doc = json.loads(res.stdout)
    assert doc["fidelity"]["verdict"]["value"] == "NO"
    assert doc["qubit_trace_norm"] is not None
    assert invoke("pairwise", "--fixture", "prop2-a").exit_code == 2


def test_simulate_bundled_protocol() -> None:
    protocol = default_corpus_path().parent / "protocols" / "prop4_ip.json"
    res = invoke("simulate", "--protocol", str(protocol), "--fixture", "prop4")
    assert res.exit_code == 0, res.output
    assert res.stdout.rstrip().splitlines()[-1] == "VERIFIED"


def test_simulate_rejects_incomplete_protocol(tmp_path: Path) -> None:
    doc = {
        "dims": [2, 2],
        "root": {
            "party": "A",
            "branches": [{"a_op": [[1, 0], [0, 0]], "b_op": [[1, 0], [0, 1]]}],
            "children": [{"leaf": None}],
        },
    }
    path = write_json(tmp_path / "p.json", doc)
    res = invoke("simulate", "--protocol", path, "--fixture", "prop5")
    assert res.exit_code == 2
    assert "completeness defect" in res.output


def test_synthesize_nielsen_and_ip(tmp_path: Path) -> None:
    states = write_json(tmp_path / "s.json", {"input": BELL, "output": SKEWED})
    out = tmp_path / "proto.json"
    res = invoke("synthesize", "--states", states, "--out", str(out))
    assert res.exit_code == 0, res.output
    assert "verified" in res.stdout
    assert load_protocol(out).dims == (2, 2)

    pair = write_json(tmp_path / "pair.json", corpus_pair("prop4"))
    res = invoke("synthesize", "--pair", pair, "--partition", "0,1;2,3", "--format", "json")
    assert res.exit_code == 0, res.output
    doc = json.loads(res.stdout)
    assert doc["verified"] is True
    assert doc["protocol"]["dims"] == [4, 4]

    res = invoke("synthesize", "--pair", pair, "--partition", "0,1,2,3")
    assert res.exit_code == 2
    assert "share block" in res.output
    infeasible = write_json(tmp_path / "inf.json", {"input": SKEWED, "output": BELL})
    assert invoke("synthesize", "--states", infeasible).exit_code == 2


def test_obstruct_command() -> None:
    res = invoke("obstruct", "--fixture", "prop5")
    assert res.exit_code == 0, res.output
    assert "INFEASIBLE:" in res.stdout

    res = invoke("obstruct", "--fixture", "prop4")
    assert res.exit_code == 2
    assert "two-qubit" in res.output


def test_corpus_command_filter() -> None:
    res = invoke("corpus", "--filter", "prop2")
    assert res.exit_code == 0, res.output
    assert "3 fixtures, 0 mismatches" in res.stdout


def test_corpus_command_mismatch_exit(tmp_path: Path) -> None:
    fx = {
        "id": "flipped",
        "pair": corpus_pair("prop3-ab"),
        "expected": {"condition_c": "YES"},
    }
    path = write_json(tmp_path / "c.json", {"version": 1, "fixtures": [fx]})
    res = invoke("corpus", "--path", path, "--samples", "0")
    assert res.exit_code == 1
    assert "FAIL flipped" in res.stdout
    assert "1 fixtures, 1 mismatches" in res.stdout
