from __future__ import annotations

import typer

from .._app import app
from .._common import (
    CONFIG,
    FORMAT,
    TOLERANCE,
    VERBOSE,
    build_config,
    emit,
    guarded,
    load_pair,
    setup_logging,
)


def parse_partition(text: str) -> list[list[int]]:
    """``"0,1;2,3"`` -> ``[[0, 1], [2, 3]]``."""

    blocks = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError(f"empty block in partition {text!r}")
        try:
            blocks.append([int(x) for x in chunk.split(",")])
        except ValueError as exc:
            msg = f"partition blocks must be comma-separated integers: {text!r}"
            raise ValueError(msg) from exc
    return blocks


@app.command()
def simulate(
    protocol: str = typer.Option(..., "--protocol", help="Protocol JSON file."),
    pair: str | None = typer.Option(None, "--pair", help="Pair JSON file (inputs, outputs)."),
    fixture: str | None = typer.Option(None, "--fixture", help="Pair fixture id (bundled)."),
    tolerance: float | None = TOLERANCE,
    output_format: str | None = FORMAT,
    config: str | None = CONFIG,
    verbose: bool = VERBOSE,
) -> None:
    """Run a protocol on every input and check that it lands on its output."""

    from ...protocols import check_set_transformation, load_protocol, require_valid
    from ..render import render_transformation

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
        p = load_protocol(protocol)
        sp = load_pair(pair, fixture)
        validation = require_valid(p, tol=cfg.tolerances.protocol)
        chk = check_set_transformation(p, sp, tol=cfg.tolerances.verify)
        payload = {"validation": validation.to_dict(), "transformation": chk.to_dict()}
        emit(cfg, payload, lambda: render_transformation(validation, chk))


@app.command()
def synthesize(
    states: str | None = typer.Option(
        None, "--states", help="JSON file with 'input' and 'output' (Nielsen protocol)."
    ),
    pair: str | None = typer.Option(
        None, "--pair", help="Pair JSON file (identify-and-prepare protocol)."
    ),
    partition: str | None = typer.Option(
        None, "--partition", help="Blocks of the measuring party, e.g. '0,1;2,3'."
    ),
    party: str = typer.Option("A", "--party", help="Measuring party for --partition: A or B."),
    out: str | None = typer.Option(None, "--out", help="Write the protocol JSON here."),
    tolerance: float | None = TOLERANCE,
    output_format: str | None = FORMAT,
    config: str | None = CONFIG,
    verbose: bool = VERBOSE,
) -> None:
    """Build a deterministic LOCC protocol and check it before writing it out."""

    import json

    from ...errors import InvariantViolation
    from ...protocols import (
        build_ip_protocol,
        check_set_transformation,
        dump_protocol,
        protocol_to_json,
        synthesize_nielsen_protocol,
    )
    from ...qstate import SetPair
    from ...schema import load_pair_file, load_two_state_file

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
        tol = cfg.tolerances.comparison
        if (states is None) == (pair is None):
            raise ValueError("give exactly one of --states or --pair")
        if states is not None:
            psi, phi = load_two_state_file(states)
            sp = SetPair.of([psi], [phi])
            p = synthesize_nielsen_protocol(psi, phi, tol=tol, label="φ1")
        else:
            if partition is None:
                raise ValueError("--pair needs --partition")
            if party not in ("A", "B"):
                raise ValueError(f"--party must be A or B, got {party!r}")
            sp = load_pair_file(pair or "")
            p = build_ip_protocol(sp, parse_partition(partition), party=party, tol=tol)

        chk = check_set_transformation(p, sp, tol=cfg.tolerances.verify)
        if not chk.verified:
            raise InvariantViolation("synthesized protocol does not reproduce the outputs")
        if out is not None:
            dump_protocol(p, out)

        doc = protocol_to_json(p)
        payload = {"protocol": doc, "out": out, "verified": chk.verified}

        def human() -> str:
            where = f"written to {out}" if out else json.dumps(doc, indent=2)
            return f"protocol depth {p.depth} on {p.dims[0]}x{p.dims[1]}, verified; {where}"

        emit(cfg, payload, human)


@app.command()
def obstruct(
    pair: str | None = typer.Option(None, "--pair", help="Pair JSON file with two states."),
    fixture: str | None = typer.Option(None, "--fixture", help="Pair fixture id (bundled)."),
    tolerance: float | None = TOLERANCE,
    output_format: str | None = FORMAT,
    config: str | None = CONFIG,
    verbose: bool = VERBOSE,
) -> None:
    """Decide whether one product operator can carry out a two-qubit Bell-pair transformation."""

    from ...protocols import product_kraus_feasibility
    from ..render import render_feasibility

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
        sp = load_pair(pair, fixture)
        tol = cfg.tolerances
        v = product_kraus_feasibility(sp, tol=tol.comparison, verify_tol=tol.verify)
        emit(cfg, {"feasibility": v.to_dict()}, lambda: render_feasibility(v))
