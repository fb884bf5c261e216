"""Run configuration structures."""

from __future__ import annotations

from .run import MEASURE_FAMILIES, OUTPUT_FORMATS, RunConfig, SamplerConfig, default_resolution
from .tolerances import DEFAULT_TOLERANCES, Tolerances

__all__ = [
    "DEFAULT_TOLERANCES",
    "MEASURE_FAMILIES",
    "OUTPUT_FORMATS",
    "RunConfig",
    "SamplerConfig",
    "Tolerances",
    "default_resolution",
]
