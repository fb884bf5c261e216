"""Entanglement measures and the Nielsen majorization criterion."""

from __future__ import annotations

from .majorization import NielsenVerdict, majorization_check, majorizes
from .measures import (
    MEASURE_NAMES,
    MeasureValue,
    applicable_measures,
    binary_entropy,
    concurrence_2q,
    eof_2q,
    eof_from_concurrence,
    measure_value,
    negativity,
    pure_state_entropy,
)

__all__ = [
    "MEASURE_NAMES",
    "MeasureValue",
    "NielsenVerdict",
    "applicable_measures",
    "binary_entropy",
    "concurrence_2q",
    "eof_2q",
    "eof_from_concurrence",
    "majorization_check",
    "majorizes",
    "measure_value",
    "negativity",
    "pure_state_entropy",
]
