from __future__ import annotations

import typer

from .._app import app
from .._common import (
    CONFIG,
    FORMAT,
    RESOLUTION,
    SAMPLES,
    SEED,
    TOLERANCE,
    VERBOSE,
    build_config,
    emit,
    guarded,
    load_pair,
    setup_logging,
)

INSUFFICIENT_NOTE = "necessary conditions met; LOCC still impossible (see obstruct)"


@app.command()
def classify(
    pair: str | None = typer.Option(None, "--pair", help="Pair JSON file (inputs, outputs)."),
    fixture: str | None = typer.Option(None, "--fixture", help="Pair fixture id (bundled)."),
    measures: str | None = typer.Option(
        None, "--measures", help="Measure family for (b): default or full-negativity."
    ),
    tolerance: float | None = TOLERANCE,
    resolution: int | None = RESOLUTION,
    samples: int | None = SAMPLES,
    seed: int | None = SEED,
    output_format: str | None = FORMAT,
    config: str | None = CONFIG,
    verbose: bool = VERBOSE,
) -> None:
    """Check conditions (a), (b), (c) for a set pair and print its region."""

    from ...conditions import classify_region
    from ...distinguishability import default_known_facts
    from ...protocols import is_supported_form, product_kraus_feasibility
    from ..render import render_report

    setup_logging(verbose)
    with guarded():
        cfg = build_config(
            config=config,
            tolerance=tolerance,
            resolution=resolution,
            samples=samples,
            seed=seed,
            output_format=output_format,
            measure_family=measures,
        )
        sp = load_pair(pair, fixture)
        report = classify_region(
            sp,
            config=cfg,
            indistinguishable_sets=default_known_facts().locc_indistinguishable_sets(),
        )

        note = None
        tol = cfg.tolerances
        if report.all_yes and is_supported_form(sp, tol=tol.comparison):
            fv = product_kraus_feasibility(sp, tol=tol.comparison, verify_tol=tol.verify)
            if not fv.feasible:
                note = INSUFFICIENT_NOTE

        payload = {"report": report.to_dict(), "note": note}
        emit(cfg, payload, lambda: render_report(report, note))


@app.command()
def nielsen(
    states: str = typer.Option(..., "--states", help="JSON file with 'input' and 'output'."),
    tolerance: float | None = TOLERANCE,
    output_format: str | None = FORMAT,
    config: str | None = CONFIG,
    verbose: bool = VERBOSE,
) -> None:
    """Nielsen majorization test for one pure-state conversion."""

    from ...entanglement import majorization_check
    from ...schema import load_two_state_file
    from ..render import render_nielsen

    setup_logging(verbose)
    with guarded():
        cfg = build_config(
            config=config,
            tolerance=tolerance,
            resolution=None,
            samples=None,
            seed=None,
            output_format=output_format,
        )
        psi, phi = load_two_state_file(states)
        v = majorization_check(psi, phi, tol=cfg.tolerances.comparison)
        emit(cfg, {"nielsen": v.to_dict()}, lambda: render_nielsen(v))


@app.command()
def pairwise(
    pair: str | None = typer.Option(None, "--pair", help="Pair JSON file with two states."),
    fixture: str | None = typer.Option(None, "--fixture", help="Pair fixture id (bundled)."),
    tolerance: float | None = TOLERANCE,
    resolution: int | None = RESOLUTION,
    output_format: str | None = FORMAT,
    config: str | None = CONFIG,
    verbose: bool = VERBOSE,
) -> None:
    """Fidelity and trace-norm baselines for two-state pairs (any quantum operation)."""

    from ...conditions import lemma1_check, lemma2_pair_feasible, lemma3_qubit_check
    from ...qstate import partial_trace
    from ..render import render_pairwise

    setup_logging(verbose)
    with guarded():
        cfg = build_config(
            config=config,
            tolerance=tolerance,
            resolution=resolution,
            samples=None,
            seed=None,
            output_format=output_format,
        )
        sp = load_pair(pair, fixture)
        if sp.n != 2:
            raise ValueError(f"pairwise needs exactly two states per side, got {sp.n}")
        tol = cfg.tolerances.comparison
        l1 = lemma1_check(sp, tol=tol)
        l2 = lemma2_pair_feasible(sp.inputs, sp.outputs, tol=tol)
        l3 = None
        if sp.input_dims[0] == 2 and sp.output_dims[0] == 2:
            l3 = lemma3_qubit_check(
                [partial_trace(s.projector(), "B") for s in sp.inputs],
                [partial_trace(s.projector(), "B") for s in sp.outputs],
                resolution=cfg.sampler.resolution_for(2),
                tol=tol,
            )
        payload = {
            "fidelity": l1.to_dict(),
            "general_feasible": l2,
            "qubit_trace_norm": None if l3 is None else l3.to_dict(),
        }
        emit(cfg, payload, lambda: render_pairwise(l1, l2, l3))
