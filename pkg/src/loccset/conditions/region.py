"""Region label over the three necessary conditions."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from ..configs import RunConfig
from ..distinguishability import TriState, Verdict
from ..errors import InvariantViolation
from ..qstate import BipartitePureState, SetPair
from .checks import (
    ConditionAResult,
    ConditionBResult,
    ConditionCResult,
    EntropyConditionResult,
    condition_a_check,
    condition_b_check,
    condition_c_check,
    entropy_condition_check,
)

logger = logging.getLogger(__name__)

_PREFIX = {Verdict.YES: "", Verdict.NO: "¬", Verdict.UNKNOWN: "?"}


def region_label(a: TriState, b: TriState, c: TriState) -> str:
    """``"a ∧ ¬b ∧ c"`` style label; an undecided coordinate is written ``?x``."""

    parts = zip("abc", (a, b, c), strict=True)
    return " ∧ ".join(f"{_PREFIX[t.value]}{name}" for name, t in parts)


@dataclass(frozen=True, slots=True, eq=False)
class ConditionReport:
    cond_a: ConditionAResult
    cond_b: ConditionBResult
    cond_c: ConditionCResult
    entropy: EntropyConditionResult
    region: str

    @property
    def all_yes(self) -> bool:
        return all(r.verdict.is_yes for r in (self.cond_a, self.cond_b, self.cond_c))

    @property
    def has_unknown(self) -> bool:
        return "?" in self.region

    def verify_witnesses(self, pair: SetPair, *, tol: float) -> None:
        """Replay every stored NO witness; raise :class:`InvariantViolation` if one fails."""

        if self.cond_a.first_failing is not None:
            k = self.cond_a.first_failing - 1
            if self.cond_a.nielsen[k].holds:
                raise InvariantViolation(f"condition (a) witness at pair {k + 1} does not replay")
        w = self.cond_b.witness
        if w is not None and not w.replay(pair, tol=tol):
            raise InvariantViolation("condition (b) witness does not replay")
        fw = self.cond_c.lemma1.worst
        if self.cond_c.lemma1.verdict.is_no and (fw is None or fw.margin >= -tol):
            raise InvariantViolation("condition (c) fidelity witness does not replay")

    def to_dict(self) -> dict:
        return {
            "region": self.region,
            "condition_a": self.cond_a.to_dict(),
            "condition_b": self.cond_b.to_dict(),
            "condition_c": self.cond_c.to_dict(),
            "entropy": self.entropy.to_dict(),
        }


def classify_region(
    pair: SetPair,
    *,
    config: RunConfig | None = None,
    indistinguishable_sets: Sequence[tuple[str, str, Sequence[BipartitePureState]]] | None = None,
) -> ConditionReport:
    """Run (a), (b), (c) and the entropy alternative, then label the region."""

    config = config or RunConfig()
    tol = config.tolerances.comparison
    a = condition_a_check(pair, tol=tol)
    b = condition_b_check(pair, sampler=config.sampler, tolerances=config.tolerances)
    c = condition_c_check(pair, tol=tol, indistinguishable_sets=indistinguishable_sets)
    e = entropy_condition_check(pair, tol=tol)
    report = ConditionReport(a, b, c, e, region_label(a.verdict, b.verdict, c.verdict))
    report.verify_witnesses(pair, tol=tol)
    logger.debug("region %s", report.region)
    return report
