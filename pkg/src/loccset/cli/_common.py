"""Options, configuration and exit-code plumbing shared by the commands.

Exit codes: 0 when a verdict was rendered, 1 for a corpus mismatch, 2 for bad
input (schema, normalisation, unsupported form, missing file) and 3 when an
internal invariant fails.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from typing import Any

import typer

from .._version import __version__
from ..configs import RunConfig
from ..errors import InvariantViolation
from ..qstate import SetPair

EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_INVARIANT = 3

TOLERANCE = typer.Option(
    None, "--tolerance", min=0.0, help="Comparison/invariant tolerance override."
)
RESOLUTION = typer.Option(None, "--resolution", min=2, help="Simplex grid resolution.")
SAMPLES = typer.Option(None, "--samples", min=0, help="Extra random simplex points.")
SEED = typer.Option(None, "--seed", help="Seed for random simplex points (default 0).")
FORMAT = typer.Option(None, "--format", help="Output format: human or json.")
CONFIG = typer.Option(None, "--config", help="RunConfig JSON file; flags override it.")
VERBOSE = typer.Option(False, "--verbose", help="Debug logging on stderr.")


def setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def build_config(
    *,
    config: str | None,
    tolerance: float | None,
    resolution: int | None,
    samples: int | None,
    seed: int | None,
    output_format: str | None,
    measure_family: str | None = None,
) -> RunConfig:
    base = RunConfig.from_json(config) if config else RunConfig()
    return base.with_overrides(
        tolerance=tolerance,
        resolution=resolution,
        samples=samples,
        seed=seed,
        measure_family=measure_family,
        output_format=output_format,
    )


def header(config: RunConfig) -> dict[str, Any]:
    return {"tool": "loccset", "version": __version__, "seed": config.sampler.seed}


def emit(config: RunConfig, payload: dict[str, Any], human: Callable[[], str]) -> None:
    """Print ``payload`` as sorted JSON, or the human rendering."""

    if config.output_format == "json":
        typer.echo(json.dumps({"header": header(config), **payload}, sort_keys=True))
        return
    h = header(config)
    typer.echo(f"{h['tool']} {h['version']} (seed {h['seed']})")
    typer.echo(human())


@contextmanager
def guarded() -> Iterator[None]:
    """Map library errors onto exit codes with a one-line diagnostic on stderr."""

    try:
        yield
    except InvariantViolation as exc:
        typer.echo(f"internal error: {exc}", err=True)
        raise typer.Exit(EXIT_INVARIANT) from exc
    except FileNotFoundError as exc:
        typer.echo(f"error: file not found: {exc.filename or exc}", err=True)
        raise typer.Exit(EXIT_INPUT) from exc
    except (ValueError, OSError) as exc:
        typer.echo(f"error: {exc}", err=True)
        raise typer.Exit(EXIT_INPUT) from exc


def load_pair(pair_path: str | None, fixture_id: str | None) -> SetPair:
    """Pair from a file, or from a pair fixture of the bundled corpus."""

    from ..corpus import get_fixture, load_default_corpus
    from ..schema import load_pair_file

    if (pair_path is None) == (fixture_id is None):
        raise ValueError("give exactly one of --pair or --fixture")
    if pair_path is not None:
        return load_pair_file(pair_path)
    fx = get_fixture(load_default_corpus(), fixture_id or "")
    if fx.pair is None:
        raise ValueError(f"fixture {fx.id!r} is a discrimination set, not a pair")
    return fx.pair
