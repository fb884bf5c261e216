"""Command-line interface.

Commands live in :mod:`loccset.cli.commands` and register themselves on the
shared :data:`app`.
"""

from __future__ import annotations

from ._app import app

__all__ = ["app", "main"]


def main() -> None:
    """Entry point for `loccset`."""

    app()
