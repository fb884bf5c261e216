"""Literature-sourced distinguishability facts per operation class.

Classes are nested ``LOCC ⊂ SEP ⊂ PPT ⊂ ALL``. A set distinguishable under a
class stays distinguishable under every larger class, and a set
indistinguishable under a class stays indistinguishable under every smaller
one; lookups use that closure, and tables that contradict it are rejected at
load time.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any

from ..errors import CorpusSchemaError, KnownFactsError, UnknownFixtureError
from ..qstate import BipartitePureState
from ..schema import parse_state_list, read_json
from .types import TriState, Verdict

logger = logging.getLogger(__name__)

CLASSES: tuple[str, ...] = ("LOCC", "SEP", "PPT", "ALL")


@dataclass(frozen=True, slots=True)
class KnownFact:
    fixture_id: str
    op_class: str
    distinguishable: bool
    source: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "fixture_id": self.fixture_id,
            "class": self.op_class,
            "distinguishable": self.distinguishable,
            "source": self.source,
        }


def check_class(op_class: str) -> str:
    if op_class not in CLASSES:
        raise ValueError(f"class must be one of {CLASSES}, got {op_class!r}")
    return op_class


def validate_monotone(facts: list[KnownFact]) -> None:
    """Raise :class:`KnownFactsError` if some set is distinguishable under a
    class but indistinguishable under a larger one."""

    by_id: dict[str, dict[int, KnownFact]] = {}
    for f in facts:
        slot = by_id.setdefault(f.fixture_id, {})
        rank = CLASSES.index(f.op_class)
        if rank in slot and slot[rank].distinguishable != f.distinguishable:
            raise KnownFactsError(f"conflicting facts for {f.fixture_id!r} under {f.op_class}")
        slot[rank] = f

    for fid, slot in by_id.items():
        for lo, f_lo in slot.items():
            for hi, f_hi in slot.items():
                if lo < hi and f_lo.distinguishable and not f_hi.distinguishable:
                    raise KnownFactsError(
                        f"{fid!r}: distinguishable under {CLASSES[lo]} but not under "
                        f"{CLASSES[hi]} violates LOCC ⊂ SEP ⊂ PPT ⊂ ALL"
                    )


@dataclass(frozen=True, slots=True, eq=False)
class KnownFactTable:
    facts: tuple[KnownFact, ...]
    sets: dict[str, tuple[BipartitePureState, ...]]
    descriptions: dict[str, str]

    def __post_init__(self) -> None:
        validate_monotone(list(self.facts))

    @property
    def fixture_ids(self) -> tuple[str, ...]:
        ids = {f.fixture_id for f in self.facts} | set(self.sets)
        return tuple(sorted(ids))

    def states(self, fixture_id: str) -> tuple[BipartitePureState, ...]:
        if fixture_id not in self.sets:
            raise UnknownFixtureError(f"no states recorded for fixture {fixture_id!r}")
        return self.sets[fixture_id]

    def lookup(self, fixture_id: str, op_class: str) -> TriState:
        """Verdict for perfect discrimination of a listed set under ``op_class``."""

        check_class(op_class)
        if fixture_id not in self.fixture_ids:
            raise UnknownFixtureError(f"fixture {fixture_id!r} is not in the known-fact table")

        rank = CLASSES.index(op_class)
        own = [f for f in self.facts if f.fixture_id == fixture_id]
        for f in own:
            if f.op_class == op_class:
                value = Verdict.YES if f.distinguishable else Verdict.NO
                return TriState(value, "known-fact", f.source)
        for f in own:
            r = CLASSES.index(f.op_class)
            if f.distinguishable and r < rank:
                return TriState.yes(
                    "known-fact",
                    f"distinguishable under {f.op_class} ⊂ {op_class}: {f.source}",
                )
            if not f.distinguishable and r > rank:
                return TriState.no(
                    "known-fact",
                    f"indistinguishable under {f.op_class} ⊃ {op_class}: {f.source}",
                )

        logger.warning("no known fact decides %r under %s", fixture_id, op_class)
        return TriState.unknown(
            "known-fact", f"no recorded fact for {fixture_id!r} under {op_class}"
        )

    def locc_indistinguishable_sets(
        self,
    ) -> list[tuple[str, str, tuple[BipartitePureState, ...]]]:
        """``(fixture_id, source, states)`` for every listed set that is LOCC indistinguishable."""

        out = []
        for fid in sorted(self.sets):
            verdict = self.lookup(fid, "LOCC")
            if verdict.is_no:
                out.append((fid, verdict.justification, self.sets[fid]))
        return out


def parse_known_facts(doc: Any) -> KnownFactTable:
    if not isinstance(doc, dict):
        raise CorpusSchemaError("known-fact document must be an object", field="$")

    facts: list[KnownFact] = []
    for k, raw in enumerate(doc.get("facts", [])):
        field = f"facts[{k}]"
        try:
            fact = KnownFact(
                fixture_id=str(raw["fixture_id"]),
                op_class=check_class(raw["class"]),
                distinguishable=bool(raw["distinguishable"]),
                source=str(raw["source"]),
            )
        except KeyError as exc:
            raise CorpusSchemaError(f"missing key {exc.args[0]!r}", field=field) from exc
        except ValueError as exc:
            raise CorpusSchemaError(str(exc), field=field) from exc
        if not fact.source:
            raise CorpusSchemaError("source must be non-empty", field=field)
        facts.append(fact)

    sets: dict[str, tuple[BipartitePureState, ...]] = {}
    descriptions: dict[str, str] = {}
    for k, raw in enumerate(doc.get("sets", [])):
        field = f"sets[{k}]"
        if not isinstance(raw, dict) or "fixture_id" not in raw:
            raise CorpusSchemaError("set entry needs a fixture_id", field=field)
        fid = str(raw["fixture_id"])
        sets[fid] = tuple(parse_state_list(raw.get("states"), field=f"{field}.states"))
        descriptions[fid] = str(raw.get("description", ""))

    return KnownFactTable(facts=tuple(facts), sets=sets, descriptions=descriptions)


def load_known_facts(path: str | Path) -> KnownFactTable:
    return parse_known_facts(read_json(path))


@lru_cache(maxsize=1)
def default_known_facts() -> KnownFactTable:
    """The table shipped with the package (loaded once)."""

    ref = resources.files("loccset.distinguishability") / "data" / "known_facts.json"
    with resources.as_file(ref) as path:
        return load_known_facts(path)


def class_distinguishable(
    fixture_id: str, op_class: str, *, table: KnownFactTable | None = None
) -> TriState:
    """Known-fact verdict for a listed set under an operation class."""

    return (table or default_known_facts()).lookup(fixture_id, op_class)
