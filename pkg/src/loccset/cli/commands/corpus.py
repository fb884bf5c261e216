from __future__ import annotations

import typer

from .._app import app
from .._common import (
    CONFIG,
    EXIT_MISMATCH,
    FORMAT,
    RESOLUTION,
    SAMPLES,
    SEED,
    TOLERANCE,
    VERBOSE,
    build_config,
    emit,
    guarded,
    setup_logging,
)


@app.command()
def corpus(
    path: str | None = typer.Option(None, "--path", help="Corpus JSON (default: bundled)."),
    id_filter: str | None = typer.Option(None, "--filter", help="Only ids containing this."),
    tolerance: float | None = TOLERANCE,
    resolution: int | None = RESOLUTION,
    samples: int | None = SAMPLES,
    seed: int | None = SEED,
    output_format: str | None = FORMAT,
    config: str | None = CONFIG,
    verbose: bool = VERBOSE,
) -> None:
    """Run the regression corpus; exits 1 when any check disagrees with its fixture."""

    from ...corpus import load_corpus, load_default_corpus, run_corpus
    from ..render import render_corpus

    setup_logging(verbose)
    with guarded():
        cfg = build_config(
            config=config,
            tolerance=tolerance,
            resolution=resolution,
            samples=samples,
            seed=seed,
            output_format=output_format,
        )
        fixtures = load_corpus(path) if path else load_default_corpus()
        report = run_corpus(fixtures, config=cfg, id_filter=id_filter)
        emit(cfg, {"corpus": report.to_dict()}, lambda: render_corpus(report))
    if not report.passed:
        raise typer.Exit(EXIT_MISMATCH)
