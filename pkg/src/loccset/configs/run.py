from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

from .tolerances import Tolerances

MEASURE_FAMILIES = ("default", "full-negativity")
OUTPUT_FORMATS = ("human", "json")


def default_resolution(n: int) -> int:
    """Grid resolution used when none is configured.

    50 for two or three states, 20 for four, ``2n`` beyond that (the number of
    interior grid points grows as C(resolution-1, n-1)).
    """

    if n <= 3:
        return 50
    if n == 4:
        return 20
    return 2 * n


@dataclass(frozen=True, slots=True)
class SamplerConfig:
    """How condition (b) approximates "for all probability vectors"."""

    resolution: int | None = None
    samples: int = 2000
    seed: int = 0
    measure_family: str = "default"

    def __post_init__(self) -> None:
        if self.resolution is not None and self.resolution < 2:
            raise ValueError(f"resolution must be >= 2, got {self.resolution}")
        if self.samples < 0:
            raise ValueError(f"samples must be >= 0, got {self.samples}")
        if self.measure_family not in MEASURE_FAMILIES:
            raise ValueError(
                f"measure_family must be one of {MEASURE_FAMILIES}, got {self.measure_family!r}"
            )

    def resolution_for(self, n: int) -> int:
        return self.resolution if self.resolution is not None else default_resolution(n)

    @staticmethod
    def from_json(path: str | Path) -> SamplerConfig:
        data = json.loads(Path(path).read_text())
        return SamplerConfig(**data)


@dataclass(frozen=True, slots=True)
class RunConfig:
    """Everything a CLI run needs besides its input files."""

    tolerances: Tolerances = field(default_factory=Tolerances)
    sampler: SamplerConfig = field(default_factory=SamplerConfig)
    output_format: str = "human"

    def __post_init__(self) -> None:
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(
                f"output_format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}"
            )

    def with_overrides(
        self,
        *,
        tolerance: float | None = None,
        resolution: int | None = None,
        samples: int | None = None,
        seed: int | None = None,
        measure_family: str | None = None,
        output_format: str | None = None,
    ) -> RunConfig:
        """Return a copy with CLI flag values applied on top of this config."""

        tol = self.tolerances
        if tolerance is not None:
            tol = replace(tol, invariant=tolerance, comparison=tolerance)

        sampler = self.sampler
        updates: dict[str, Any] = {}
        if resolution is not None:
            updates["resolution"] = resolution
        if samples is not None:
            updates["samples"] = samples
        if seed is not None:
            updates["seed"] = seed
        if measure_family is not None:
            updates["measure_family"] = measure_family
        if updates:
            sampler = replace(sampler, **updates)

        return RunConfig(
            tolerances=tol,
            sampler=sampler,
            output_format=output_format if output_format is not None else self.output_format,
        )

    @staticmethod
    def from_dict(data: dict[str, Any]) -> RunConfig:
        unknown = set(data) - {"tolerances", "sampler", "output_format"}
        if unknown:
            raise ValueError(f"unknown RunConfig keys: {sorted(unknown)}")
        return RunConfig(
            tolerances=Tolerances(**data.get("tolerances", {})),
            sampler=SamplerConfig(**data.get("sampler", {})),
            output_format=data.get("output_format", "human"),
        )

    @staticmethod
    def from_json(path: str | Path) -> RunConfig:
        data = json.loads(Path(path).read_text())
        return RunConfig.from_dict(data)
