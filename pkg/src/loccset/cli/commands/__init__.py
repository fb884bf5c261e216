"""CLI command implementations.

Modules in this package register Typer commands against the shared app in
:mod:`loccset.cli._app`.
"""

from __future__ import annotations
