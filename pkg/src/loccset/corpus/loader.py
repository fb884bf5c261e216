"""Fixture corpus loading.

Corpus schema
-------------
::

    {"version": 1,
     "fixtures": [
        {"id": "prop4", "provenance": "...",
         "pair": {"inputs": [...], "outputs": [...]},
         "protocol": "protocols/prop4_ip.json",
         "expected": {"condition_a": "YES", "region": "a ∧ b ∧ c", ...}},
        {"id": "bell-basis", "provenance": "...", "known_set": "bell-basis",
         "expected": {"class:PPT": "NO", ...}}]}

A fixture carries either a ``pair`` (set transformation checks) or a
``known_set`` naming a set in the known-fact table (discrimination checks).
``protocol`` paths are relative to the corpus file. An empty file is an
empty corpus.
"""

from __future__ import annotations

import re
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any

from ..distinguishability import CLASSES, KnownFactTable, default_known_facts
from ..errors import CorpusSchemaError, UnknownFixtureError
from ..protocols import Protocol, load_protocol
from ..qstate import SetPair
from ..schema import loads_json, parse_pair

VERDICTS = ("YES", "NO", "UNKNOWN")
FEASIBILITY = ("FEASIBLE", "INFEASIBLE", "UNSUPPORTED")
PROTOCOL_OUTCOMES = ("VERIFIED", "FAILED")

PAIR_CHECKS: dict[str, tuple[str, ...] | None] = {
    "condition_a": VERDICTS,
    "condition_b": VERDICTS,
    "condition_c": VERDICTS,
    "region": None,
    "lemma1": VERDICTS,
    "locc_inputs": VERDICTS,
    "locc_outputs": VERDICTS,
    "entropy": VERDICTS,
    "product_kraus": FEASIBILITY,
    "protocol": PROTOCOL_OUTCOMES,
}

SET_CHECKS: dict[str, tuple[str, ...] | None] = {
    "locc": VERDICTS,
    **{f"class:{c}": VERDICTS for c in CLASSES},
    **{f"transform:{c}": VERDICTS for c in CLASSES},
}

_ID_LINE = re.compile(r'"id"\s*:\s*"((?:[^"\\]|\\.)*)"')


@dataclass(frozen=True, slots=True, eq=False)
class Fixture:
    """One corpus entry; exactly one of ``pair`` and ``known_set`` is set."""

    id: str
    provenance: str
    expected: dict[str, str]
    pair: SetPair | None = None
    known_set: str | None = None
    protocol: Protocol | None = None
    line: int | None = field(default=None, compare=False)

    @property
    def kind(self) -> str:
        return "pair" if self.pair is not None else "set"


def _id_lines(text: str) -> dict[str, int]:
    out: dict[str, int] = {}
    for lineno, row in enumerate(text.splitlines(), start=1):
        m = _ID_LINE.search(row)
        if m is not None:
            out.setdefault(m.group(1), lineno)
    return out


def _check_expected(raw: Any, *, kind: str, where: str, line: int | None) -> dict[str, str]:
    if not isinstance(raw, Mapping) or len(raw) == 0:
        raise CorpusSchemaError("expected must be a non-empty object", field=where, line=line)
    allowed = PAIR_CHECKS if kind == "pair" else SET_CHECKS
    out: dict[str, str] = {}
    for name, value in raw.items():
        if name not in allowed:
            raise CorpusSchemaError(
                f"unknown check {name!r} for a {kind} fixture",
                field=f"{where}.{name}",
                line=line,
            )
        if not isinstance(value, str):
            raise CorpusSchemaError(
                "expected value must be a string", field=f"{where}.{name}", line=line
            )
        choices = allowed[name]
        if choices is not None and value not in choices:
            raise CorpusSchemaError(
                f"{value!r} is not one of {choices}", field=f"{where}.{name}", line=line
            )
        out[str(name)] = value
    return out


def _parse_fixture(
    raw: Any,
    *,
    k: int,
    lines: dict[str, int],
    base: Path | None,
    table: KnownFactTable,
) -> Fixture:
    where = f"fixtures[{k}]"
    if not isinstance(raw, Mapping):
        raise CorpusSchemaError("fixture must be an object", field=where)
    fid = raw.get("id")
    if not isinstance(fid, str) or not fid:
        raise CorpusSchemaError("fixture needs a non-empty string id", field=f"{where}.id")
    line = lines.get(fid)

    has_pair, has_set = "pair" in raw, "known_set" in raw
    if has_pair == has_set:
        raise CorpusSchemaError(
            "fixture needs exactly one of 'pair' or 'known_set'", field=where, line=line
        )

    pair = None
    known_set = None
    if has_pair:
        try:
            pair = parse_pair(raw["pair"], field=f"{where}.pair")
        except CorpusSchemaError as exc:
            raise CorpusSchemaError(exc.message, field=exc.field, line=line) from exc
    else:
        known_set = str(raw["known_set"])
        try:
            table.states(known_set)
        except UnknownFixtureError as exc:
            raise CorpusSchemaError(str(exc), field=f"{where}.known_set", line=line) from exc

    kind = "pair" if has_pair else "set"
    expected = _check_expected(
        raw.get("expected"), kind=kind, where=f"{where}.expected", line=line
    )

    protocol = None
    if "protocol" in raw:
        if not has_pair or not isinstance(raw["protocol"], str):
            raise CorpusSchemaError(
                "protocol must be a path on a pair fixture", field=f"{where}.protocol", line=line
            )
        ppath = Path(raw["protocol"])
        if not ppath.is_absolute() and base is not None:
            ppath = base / ppath
        try:
            protocol = load_protocol(ppath)
        except (OSError, CorpusSchemaError) as exc:
            raise CorpusSchemaError(
                f"cannot load protocol {ppath}: {exc}", field=f"{where}.protocol", line=line
            ) from exc
    if "protocol" in expected and protocol is None:
        raise CorpusSchemaError(
            "expected 'protocol' needs a protocol file", field=f"{where}.expected", line=line
        )

    return Fixture(
        id=fid,
        provenance=str(raw.get("provenance", "")),
        expected=expected,
        pair=pair,
        known_set=known_set,
        protocol=protocol,
        line=line,
    )


def parse_corpus(
    text: str,
    *,
    base: Path | None = None,
    source: str = "$",
    table: KnownFactTable | None = None,
) -> list[Fixture]:
    """Parse corpus JSON text; ``base`` resolves relative protocol paths."""

    if not text.strip():
        return []
    doc = loads_json(text, source=source)
    if not isinstance(doc, Mapping) or not isinstance(doc.get("fixtures", []), Sequence):
        raise CorpusSchemaError("corpus must be an object with a 'fixtures' list", field=source)

    table = table or default_known_facts()
    lines = _id_lines(text)
    fixtures: list[Fixture] = []
    seen: set[str] = set()
    for k, raw in enumerate(doc.get("fixtures", [])):
        fx = _parse_fixture(raw, k=k, lines=lines, base=base, table=table)
        if fx.id in seen:
            raise CorpusSchemaError(f"duplicate fixture id {fx.id!r}", field=f"fixtures[{k}].id")
        seen.add(fx.id)
        fixtures.append(fx)
    return fixtures


def load_corpus(path: str | Path, *, table: KnownFactTable | None = None) -> list[Fixture]:
    p = Path(path)
    if not p.exists():
        raise FileNotFoundError(str(p))
    text = p.read_text(encoding="utf-8")
    return parse_corpus(text, base=p.parent, source=str(p), table=table)


def default_corpus_path() -> Path:
    ref = resources.files("loccset.corpus") / "data" / "corpus.json"
    return Path(str(ref))


@lru_cache(maxsize=1)
def _default_corpus() -> tuple[Fixture, ...]:
    return tuple(load_corpus(default_corpus_path()))


def load_default_corpus() -> list[Fixture]:
    """The corpus shipped with the package (parsed once)."""

    return list(_default_corpus())


def select_fixtures(fixtures: Sequence[Fixture], pattern: str | None) -> list[Fixture]:
    """Fixtures whose id contains ``pattern`` (all of them when ``pattern`` is falsy)."""

    if not pattern:
        return list(fixtures)
    return [f for f in fixtures if pattern in f.id]


def get_fixture(fixtures: Sequence[Fixture], fixture_id: str) -> Fixture:
    for f in fixtures:
        if f.id == fixture_id:
            return f
    raise UnknownFixtureError(f"fixture {fixture_id!r} is not in the corpus")
