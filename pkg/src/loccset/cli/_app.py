from __future__ import annotations

import typer

app = typer.Typer(add_completion=False, no_args_is_help=True)

# Register commands.
#
# Commands are defined in submodules so :mod:`loccset.cli.__init__` stays a thin
# entry point.
from .commands import check as _check  # noqa: E402,F401
from .commands import core as _core  # noqa: E402,F401
from .commands import corpus as _corpus  # noqa: E402,F401
from .commands import protocol as _protocol  # noqa: E402,F401
