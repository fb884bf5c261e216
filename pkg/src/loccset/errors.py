"""Exception types.

Input problems are ``ValueError`` subclasses so callers that only care about
"bad input" can keep catching ``ValueError``. Internal consistency failures are
``RuntimeError`` subclasses and indicate a bug rather than a bad file.
"""

from __future__ import annotations


class LoccsetError(Exception):
    """Base class for all errors raised by :mod:`loccset`."""


class NormalizationError(LoccsetError, ValueError):
    """A state or probability vector is not normalised (or is degenerate)."""


class DimensionMismatchError(LoccsetError, ValueError):
    """Operands live on incompatible Hilbert spaces."""


class InfeasibleTransformationError(LoccsetError, ValueError):
    """A requested deterministic transformation violates majorization."""


class UnsupportedFormError(LoccsetError, ValueError):
    """Input lies outside the family a solver supports."""


class PartitionError(LoccsetError, ValueError):
    """A subspace partition does not separate the input supports."""


class ProtocolStructureError(LoccsetError, ValueError):
    """A protocol tree is malformed or fails completeness."""

    def __init__(self, message: str, *, defects: dict[str, float] | None = None) -> None:
        super().__init__(message)
        self.defects = dict(defects or {})


class UnknownFixtureError(LoccsetError, ValueError):
    """A fixture id is not present in the corpus or the known-fact table."""


class KnownFactsError(LoccsetError, ValueError):
    """The known-fact table is inconsistent (e.g. violates class monotonicity)."""


class CorpusSchemaError(LoccsetError, ValueError):
    """A corpus, pair or protocol document does not match its schema.

    Attributes
    ----------
    field:
        Dotted/indexed path of the offending field (e.g. ``fixtures[3].pair.inputs[0]``).
    line:
        1-based line in the source file where the offending object starts, when known.
    """

    def __init__(self, message: str, *, field: str = "", line: int | None = None) -> None:
        where = field
        if line is not None:
            where = f"line {line}: {field}" if field else f"line {line}"
        super().__init__(f"{where}: {message}" if where else message)
        self.message = message
        self.field = field
        self.line = line


class InvariantViolation(LoccsetError, RuntimeError):
    """An internal invariant failed (e.g. a NO witness does not replay)."""
