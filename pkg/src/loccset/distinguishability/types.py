from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Verdict(str, Enum):
    YES = "YES"
    NO = "NO"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True, slots=True)
class TriState:
    """YES / NO / UNKNOWN with the rule that produced it.

    ``rule`` is a short identifier (``"R4"``, ``"fidelity"``, ``"known-fact"``);
    ``justification`` is the human-readable reason, including the citation when
    the verdict rests on a literature result.
    """

    value: Verdict
    rule: str
    justification: str

    @staticmethod
    def yes(rule: str, justification: str) -> TriState:
        return TriState(Verdict.YES, rule, justification)

    @staticmethod
    def no(rule: str, justification: str) -> TriState:
        return TriState(Verdict.NO, rule, justification)

    @staticmethod
    def unknown(rule: str, justification: str) -> TriState:
        return TriState(Verdict.UNKNOWN, rule, justification)

    @property
    def is_yes(self) -> bool:
        return self.value is Verdict.YES

    @property
    def is_no(self) -> bool:
        return self.value is Verdict.NO

    @property
    def is_unknown(self) -> bool:
        return self.value is Verdict.UNKNOWN

    def to_dict(self) -> dict:
        return {"value": self.value.value, "rule": self.rule, "justification": self.justification}
