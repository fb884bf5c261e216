"""Regression run: actual verdicts against each fixture's expected values."""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from ..conditions import ConditionReport, classify_region
from ..configs import RunConfig
from ..distinguishability import (
    KnownFactTable,
    class_distinguishable,
    class_transformable,
    default_known_facts,
    locc_distinguishable,
)
from ..protocols import (
    check_set_transformation,
    is_supported_form,
    product_kraus_feasibility,
    require_valid,
)
from .loader import Fixture, select_fixtures

logger = logging.getLogger(__name__)

_REPORT_CHECKS = {
    "condition_a": lambda r: r.cond_a.verdict,
    "condition_b": lambda r: r.cond_b.verdict,
    "condition_c": lambda r: r.cond_c.verdict,
    "lemma1": lambda r: r.cond_c.lemma1.verdict,
    "locc_inputs": lambda r: r.cond_c.locc_inputs,
    "locc_outputs": lambda r: r.cond_c.locc_outputs,
    "entropy": lambda r: r.entropy.verdict,
}


@dataclass(frozen=True, slots=True)
class CheckOutcome:
    check: str
    expected: str
    actual: str
    detail: str = ""

    @property
    def matched(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "expected": self.expected,
            "actual": self.actual,
            "matched": self.matched,
            "detail": self.detail,
        }


@dataclass(frozen=True, slots=True)
class FixtureResult:
    fixture_id: str
    outcomes: tuple[CheckOutcome, ...]

    @property
    def mismatches(self) -> tuple[CheckOutcome, ...]:
        return tuple(o for o in self.outcomes if not o.matched)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "id": self.fixture_id,
            "passed": self.passed,
            "checks": [o.to_dict() for o in self.outcomes],
        }


@dataclass(frozen=True, slots=True)
class CorpusReport:
    results: tuple[FixtureResult, ...]

    @property
    def fixtures_run(self) -> int:
        return len(self.results)

    @property
    def mismatches(self) -> list[tuple[str, CheckOutcome]]:
        return [(r.fixture_id, o) for r in self.results for o in r.mismatches]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "fixtures_run": self.fixtures_run,
            "mismatches": len(self.mismatches),
            "passed": self.passed,
            "fixtures": [r.to_dict() for r in self.results],
        }


def _pair_actuals(
    fx: Fixture, config: RunConfig, table: KnownFactTable
) -> dict[str, Callable[[], tuple[str, str]]]:
    pair = fx.pair
    assert pair is not None
    cache: dict[str, ConditionReport] = {}

    def report() -> ConditionReport:
        if "r" not in cache:
            cache["r"] = classify_region(
                pair, config=config, indistinguishable_sets=table.locc_indistinguishable_sets()
            )
        return cache["r"]

    def from_report(name: str) -> Callable[[], tuple[str, str]]:
        def get() -> tuple[str, str]:
            t = _REPORT_CHECKS[name](report())
            return t.value.value, f"{t.rule}: {t.justification}"

        return get

    def region() -> tuple[str, str]:
        return report().region, ""

    def product_kraus() -> tuple[str, str]:
        tol = config.tolerances
        if not is_supported_form(pair, tol=tol.comparison):
            return "UNSUPPORTED", "outside the two-qubit maximally entangled input family"
        v = product_kraus_feasibility(pair, tol=tol.comparison, verify_tol=tol.verify)
        if v.feasible:
            return "FEASIBLE", "witness replays"
        return "INFEASIBLE", v.obstruction or ""

    def protocol() -> tuple[str, str]:
        assert fx.protocol is not None
        require_valid(fx.protocol, tol=config.tolerances.protocol)
        chk = check_set_transformation(fx.protocol, pair, tol=config.tolerances.verify)
        worst = min(c.min_fidelity for c in chk.inputs)
        return ("VERIFIED" if chk.verified else "FAILED"), f"min fidelity {worst:.12g}"

    getters: dict[str, Callable[[], tuple[str, str]]] = {
        name: from_report(name) for name in _REPORT_CHECKS
    }
    getters.update(region=region, product_kraus=product_kraus, protocol=protocol)
    return getters


def _set_actual(
    fx: Fixture, check: str, config: RunConfig, table: KnownFactTable
) -> tuple[str, str]:
    assert fx.known_set is not None
    if check == "locc":
        t = locc_distinguishable(
            table.states(fx.known_set),
            tol=config.tolerances.comparison,
            indistinguishable_sets=table.locc_indistinguishable_sets(),
        )
    else:
        kind, op_class = check.split(":", 1)
        fn = class_distinguishable if kind == "class" else class_transformable
        t = fn(fx.known_set, op_class, table=table)
    return t.value.value, f"{t.rule}: {t.justification}"


def run_fixture(
    fx: Fixture, *, config: RunConfig | None = None, table: KnownFactTable | None = None
) -> FixtureResult:
    config = config or RunConfig()
    table = table or default_known_facts()
    getters = _pair_actuals(fx, config, table) if fx.pair is not None else {}

    outcomes = []
    for check, expected in fx.expected.items():
        if fx.pair is not None:
            actual, detail = getters[check]()
        else:
            actual, detail = _set_actual(fx, check, config, table)
        out = CheckOutcome(check, expected, actual, detail)
        if not out.matched:
            logger.warning(
                "%s: %s expected %s, got %s (%s)", fx.id, check, expected, actual, detail
            )
        outcomes.append(out)
    return FixtureResult(fx.id, tuple(outcomes))


def run_corpus(
    fixtures: Sequence[Fixture],
    *,
    config: RunConfig | None = None,
    table: KnownFactTable | None = None,
    id_filter: str | None = None,
) -> CorpusReport:
    """Evaluate every (filtered) fixture; UNKNOWN only matches an expected UNKNOWN."""

    selected = select_fixtures(fixtures, id_filter)
    results = tuple(run_fixture(fx, config=config, table=table) for fx in selected)
    report = CorpusReport(results)
    logger.info(
        "corpus: %d fixtures run, %d mismatches", report.fixtures_run, len(report.mismatches)
    )
    return report
