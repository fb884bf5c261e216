"""Human-readable renderings of reports.

Every satisfied inequality is printed with its margin (smallest slack) so that
near-violations stay visible.
"""

from __future__ import annotations

from ..conditions import ConditionReport, Lemma1Result, Lemma3Result
from ..corpus import CorpusReport
from ..distinguishability import TriState
from ..entanglement import NielsenVerdict
from ..protocols import FeasibilityVerdict, ProtocolValidation, TransformationCheck


def _verdict(label: str, t: TriState, margin: float | None = None) -> str:
    slack = "" if margin is None else f" (margin {margin:.3g})"
    return f"{label:<8}{t.value.value:<8}[{t.rule}] {t.justification}{slack}"


def render_report(report: ConditionReport, note: str | None = None) -> str:
    a_margin = min((v.margin for v in report.cond_a.nielsen), default=None)
    worst = report.cond_c.lemma1.worst
    lines = [
        f"region: {report.region}",
        _verdict("(a)", report.cond_a.verdict, a_margin),
        _verdict("(b)", report.cond_b.verdict, report.cond_b.min_margin),
        _verdict("(c)", report.cond_c.verdict, None if worst is None else worst.margin),
        _verdict("entropy", report.entropy.verdict),
        f"        LOCC inputs:  {report.cond_c.locc_inputs.value.value} "
        f"[{report.cond_c.locc_inputs.rule}]",
        f"        LOCC outputs: {report.cond_c.locc_outputs.value.value} "
        f"[{report.cond_c.locc_outputs.rule}]",
    ]
    if note:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def render_nielsen(v: NielsenVerdict) -> str:
    lines = [f"{'l':>3}  {'input':>12}  {'output':>12}"]
    for k, (a, b) in enumerate(zip(v.partial_sums_in, v.partial_sums_out, strict=True)):
        flag = "  <- fails" if v.first_violating_l == k + 1 else ""
        lines.append(f"{k + 1:>3}  {a:>12.9f}  {b:>12.9f}{flag}")
    if v.holds:
        lines.append(f"PASS (margin {v.margin:.3g})")
    else:
        lines.append(f"FAIL at l={v.first_violating_l} (margin {v.margin:.3g})")
    return "\n".join(lines)


def render_pairwise(l1: Lemma1Result, l2: bool, l3: Lemma3Result | None) -> str:
    lines = [_verdict("fidelity", l1.verdict, None if l1.worst is None else l1.worst.margin)]
    verb = "maps" if l2 else "cannot map"
    lines.append(
        f"{'general':<8}{'YES' if l2 else 'NO':<8}[fidelity] some quantum operation {verb} "
        "the inputs onto the outputs"
    )
    if l3 is None:
        lines.append("qubit   skipped (the A side is not a qubit)")
    else:
        lines.append(_verdict("qubit", l3.verdict, l3.margin))
    return "\n".join(lines)


def render_validation(v: ProtocolValidation) -> str:
    status = "valid" if v.valid else "INVALID"
    return f"protocol {status} (max completeness defect {v.max_defect:.3g})"


def render_transformation(v: ProtocolValidation, chk: TransformationCheck) -> str:
    lines = [render_validation(v)]
    for c in chk.inputs:
        lines.append(
            f"input {c.index}: {c.outcomes} outcomes, probability mass {c.probability_sum:.12g}, "
            f"min fidelity {c.min_fidelity:.12g}"
        )
    lines.append("VERIFIED" if chk.verified else "NOT VERIFIED")
    return "\n".join(lines)


def render_feasibility(v: FeasibilityVerdict) -> str:
    if not v.feasible:
        return f"INFEASIBLE: {v.obstruction}"
    assert v.witness is not None
    mu1, mu2 = v.witness.mu1, v.witness.mu2
    return f"FEASIBLE: product operator found with μ1 = {mu1:.6g}, μ2 = {mu2:.6g}"


def render_corpus(report: CorpusReport) -> str:
    lines = []
    for r in report.results:
        lines.append(f"{'ok  ' if r.passed else 'FAIL'} {r.fixture_id} ({len(r.outcomes)} checks)")
        for o in r.mismatches:
            lines.append(f"     {o.check}: expected {o.expected}, got {o.actual}")
    lines.append(f"{report.fixtures_run} fixtures, {len(report.mismatches)} mismatches")
    return "\n".join(lines)
