"""Necessary conditions for a deterministic LOCC set transformation.

For a pair ``S_ψ → S_φ`` of equally sized sets of bipartite pure states:

(a) every ``ψ_i → φ_i`` satisfies the Nielsen majorization criterion;
(b) ``E(ρ_{ψ,p}) ≥ E(ρ_{φ,p})`` for every interior probability vector ``p``
    and every entanglement measure ``E``;
(c) the ensemble ``{p_i, ψ_i}`` is at least as distinguishable as
    ``{p_i, φ_i}``, globally and under LOCC.

(a) is decided exactly. (b) and (c) quantify over infinitely many measures
and probability vectors, so a NO always carries a concrete witness while a
YES only means that nothing in the implemented family found a violation.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from ..configs import DEFAULT_TOLERANCES, SamplerConfig, Tolerances
from ..distinguishability import TriState, locc_distinguishable
from ..entanglement import (
    NielsenVerdict,
    applicable_measures,
    concurrence_2q,
    eof_from_concurrence,
    majorization_check,
    negativity,
    pure_state_entropy,
)
from ..errors import InvariantViolation
from ..qstate import BipartitePureState, DensityOperator, Ensemble, SetPair, ensemble_density
from .baselines import Lemma1Result, lemma1_check
from .simplex import SimplexPoint, simplex_grid

logger = logging.getLogger(__name__)


def require_pair(pair: SetPair) -> None:
    if pair.n < 2:
        raise ValueError(f"the set conditions need at least two input states, got {pair.n}")


@dataclass(frozen=True, slots=True, eq=False)
class ConditionAResult:
    """Verdict of (a) with one Nielsen test per index.

    ``first_failing`` is the 1-based index of the first pair that fails.
    """

    verdict: TriState
    nielsen: tuple[NielsenVerdict, ...]
    first_failing: int | None

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.to_dict(),
            "first_failing": self.first_failing,
            "pairs": [v.to_dict() for v in self.nielsen],
        }


def condition_a_check(
    pair: SetPair, *, tol: float = DEFAULT_TOLERANCES.comparison
) -> ConditionAResult:
    require_pair(pair)
    verdicts = tuple(
        majorization_check(psi, phi, tol=tol)
        for psi, phi in zip(pair.inputs, pair.outputs, strict=True)
    )
    for k, v in enumerate(verdicts):
        if not v.holds:
            return ConditionAResult(
                TriState.no(
                    "nielsen",
                    f"Nielsen criterion fails for (ψ{k + 1}, φ{k + 1}) at l = "
                    f"{v.first_violating_l}",
                ),
                verdicts,
                k + 1,
            )
    margin = min(v.margin for v in verdicts)
    return ConditionAResult(
        TriState.yes(
            "nielsen", f"Nielsen criterion holds for all {pair.n} pairs (min slack {margin:.3g})"
        ),
        verdicts,
        None,
    )


@dataclass(frozen=True, slots=True)
class EntropyConditionResult:
    verdict: TriState
    entropies: tuple[tuple[float, float], ...]

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.to_dict(),
            "entropies": [{"input": a, "output": b} for a, b in self.entropies],
        }


def entropy_condition_check(
    pair: SetPair, *, tol: float = DEFAULT_TOLERANCES.comparison
) -> EntropyConditionResult:
    """``E(ψ_i) ≥ E(φ_i)`` for every ``i`` (entropy of entanglement).

    Implied by (a) but strictly weaker: majorization can fail while the
    entropy still drops.
    """

    require_pair(pair)
    entropies = tuple(
        (pure_state_entropy(psi), pure_state_entropy(phi))
        for psi, phi in zip(pair.inputs, pair.outputs, strict=True)
    )
    for k, (e_in, e_out) in enumerate(entropies):
        if e_in + tol < e_out:
            return EntropyConditionResult(
                TriState.no(
                    "entropy",
                    f"E(φ{k + 1}) = {e_out:.6g} ebit exceeds E(ψ{k + 1}) = {e_in:.6g} ebit",
                ),
                entropies,
            )
    return EntropyConditionResult(
        TriState.yes("entropy", "no pure-state entropy increases"), entropies
    )


def _mixture(states: Sequence[BipartitePureState], probs: np.ndarray) -> DensityOperator:
    return ensemble_density(Ensemble(probs, tuple(states)))


def _magnitude_measures(pair: SetPair, family: str) -> tuple[str, ...]:
    both_qubits = pair.input_dims == (2, 2) and pair.output_dims == (2, 2)
    if both_qubits:
        return applicable_measures((2, 2))
    if family == "full-negativity":
        return ("negativity",)
    return ()


def _measure_values(rho: DensityOperator, measures: Sequence[str]) -> dict[str, float]:
    values = {"negativity": negativity(rho)}
    if "concurrence" in measures or "eof_2q" in measures:
        c = concurrence_2q(rho)
        values["concurrence"] = c
        values["eof_2q"] = eof_from_concurrence(c)
    return values


@dataclass(frozen=True, slots=True, eq=False)
class ConditionBWitness:
    """A probability vector at which some measure increases.

    ``rule`` is ``"ppt"`` when ``ρ_{ψ,p}`` has a positive partial transpose
    while ``ρ_{φ,p}`` does not, and ``"magnitude"`` when the measure value
    itself grows.
    """

    point: SimplexPoint
    measure: str
    rule: str
    value_in: float
    value_out: float

    def replay(self, pair: SetPair, *, tol: float = DEFAULT_TOLERANCES.comparison) -> bool:
        """Recompute both values at ``point`` and re-test the violation."""

        rho_in = _mixture(pair.inputs, self.point.probs)
        rho_out = _mixture(pair.outputs, self.point.probs)
        v_in = _measure_values(rho_in, (self.measure,))[self.measure]
        v_out = _measure_values(rho_out, (self.measure,))[self.measure]
        if self.rule == "ppt":
            return v_in <= tol and v_out > tol
        return v_in + tol < v_out

    def to_dict(self) -> dict:
        return {
            "p": self.point.to_list(),
            "measure": self.measure,
            "rule": self.rule,
            "value_in": self.value_in,
            "value_out": self.value_out,
        }


@dataclass(frozen=True, slots=True, eq=False)
class ConditionBResult:
    """Verdict of (b).

    ``min_margin`` is the smallest ``E(ρ_{ψ,p}) - E(ρ_{φ,p})`` over every
    compared measure and point; ``None`` when only the PPT rule applied.
    """

    verdict: TriState
    witness: ConditionBWitness | None
    points: int
    measures: tuple[str, ...]
    min_margin: float | None

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.to_dict(),
            "witness": None if self.witness is None else self.witness.to_dict(),
            "points": self.points,
            "measures": list(self.measures),
            "min_margin": self.min_margin,
        }


def condition_b_check(
    pair: SetPair,
    *,
    sampler: SamplerConfig | None = None,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> ConditionBResult:
    """Sampled check of (b); points are visited in grid order and the first violation wins."""

    require_pair(pair)
    sampler = sampler or SamplerConfig()
    tol = tolerances.comparison
    resolution = sampler.resolution_for(pair.n)
    measures = _magnitude_measures(pair, sampler.measure_family)

    witness: ConditionBWitness | None = None
    min_margin: float | None = None
    count = 0
    for point in simplex_grid(pair.n, resolution, samples=sampler.samples, seed=sampler.seed):
        count += 1
        v_in = _measure_values(_mixture(pair.inputs, point.probs), measures)
        v_out = _measure_values(_mixture(pair.outputs, point.probs), measures)

        if v_in["negativity"] <= tol and v_out["negativity"] > tol:
            witness = ConditionBWitness(
                point, "negativity", "ppt", v_in["negativity"], v_out["negativity"]
            )
            break
        for m in measures:
            margin = v_in[m] - v_out[m]
            min_margin = margin if min_margin is None else min(min_margin, margin)
            if v_in[m] + tol < v_out[m]:
                witness = ConditionBWitness(point, m, "magnitude", v_in[m], v_out[m])
                break
        if witness is not None:
            break

    logger.debug("condition (b): evaluated %d simplex points", count)
    if witness is not None:
        if not witness.replay(pair, tol=tol):
            raise InvariantViolation(
                f"condition (b) witness at p={witness.point.to_list()} does not replay"
            )
        p = [round(x, 6) for x in witness.point.to_list()]
        if witness.rule == "ppt":
            reason = (
                f"at p = {p}, ρ_ψ has positive partial transpose but ρ_φ has negativity "
                f"{witness.value_out:.6g}: entanglement would be created"
            )
        else:
            reason = (
                f"at p = {p}, {witness.measure} grows from {witness.value_in:.6g} "
                f"to {witness.value_out:.6g}"
            )
        return ConditionBResult(
            TriState.no(witness.rule, reason), witness, count, measures, min_margin
        )

    if count == 0:
        return ConditionBResult(
            TriState.unknown(
                "sampled",
                f"no simplex points to test: resolution {resolution} has no interior grid "
                f"point for n = {pair.n} and no random samples were requested",
            ),
            None,
            0,
            measures,
            None,
        )

    compared = ", ".join(measures) if measures else "PPT rule only"
    slack = "" if min_margin is None else f"; min slack {min_margin:.3g}"
    return ConditionBResult(
        TriState.yes(
            "sampled",
            f"YES-sampled: no violation on {count} points "
            f"(resolution {resolution}, {sampler.samples} random, seed {sampler.seed}; "
            f"{compared}{slack})",
        ),
        None,
        count,
        measures,
        min_margin,
    )


@dataclass(frozen=True, slots=True)
class ConditionCResult:
    verdict: TriState
    lemma1: Lemma1Result
    locc_inputs: TriState
    locc_outputs: TriState

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.to_dict(),
            "lemma1": self.lemma1.to_dict(),
            "locc_inputs": self.locc_inputs.to_dict(),
            "locc_outputs": self.locc_outputs.to_dict(),
        }


def condition_c_check(
    pair: SetPair,
    *,
    tol: float = DEFAULT_TOLERANCES.comparison,
    indistinguishable_sets: Sequence[tuple[str, str, Sequence[BipartitePureState]]] | None = None,
) -> ConditionCResult:
    """Distinguishability may not grow, globally (fidelity) or under LOCC."""

    require_pair(pair)
    l1 = lemma1_check(pair, tol=tol)
    li = locc_distinguishable(pair.inputs, tol=tol, indistinguishable_sets=indistinguishable_sets)
    lo = locc_distinguishable(pair.outputs, tol=tol, indistinguishable_sets=indistinguishable_sets)

    if l1.verdict.is_no:
        verdict = TriState.no("fidelity", l1.verdict.justification)
    elif li.is_no and lo.is_yes:
        verdict = TriState.no(
            "locc-downgrade",
            f"inputs are locally indistinguishable ({li.rule}) but outputs are locally "
            f"distinguishable ({lo.rule})",
        )
    elif lo.is_yes and not li.is_yes:
        verdict = TriState.unknown(
            "locc-downgrade",
            f"outputs are locally distinguishable ({lo.rule}) but no rule decides the inputs",
        )
    else:
        verdict = TriState.yes(
            "distinguishability",
            f"no pairwise fidelity decreases; LOCC distinguishability inputs={li.value.value} "
            f"({li.rule}), outputs={lo.value.value} ({lo.rule})",
        )
    return ConditionCResult(verdict, l1, li, lo)
