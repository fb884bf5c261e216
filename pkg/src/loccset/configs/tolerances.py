from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True, slots=True)
class Tolerances:
    """Numerical tolerances shared by all checks.

    Attributes
    ----------
    invariant:
        Normalisation, Hermiticity and trace checks on states and density operators.
    reconstruction:
        Schmidt reconstruction error bound.
    comparison:
        Slack on every inequality (ties count as satisfied).
    prune:
        Branch probability below which protocol outcomes are dropped.
    protocol:
        Completeness defect allowed at a protocol node.
    verify:
        Fidelity slack when verifying a set transformation.
    """

    invariant: float = 1e-9
    reconstruction: float = 1e-8
    comparison: float = 1e-9
    prune: float = 1e-12
    protocol: float = 1e-8
    verify: float = 1e-7

    def __post_init__(self) -> None:
        for name in ("invariant", "reconstruction", "comparison", "prune", "protocol", "verify"):
            value = getattr(self, name)
            if not (value >= 0.0):
                raise ValueError(f"tolerance {name} must be non-negative, got {value!r}")

    @staticmethod
    def from_json(path: str | Path) -> Tolerances:
        data = json.loads(Path(path).read_text())
        return Tolerances(**data)


DEFAULT_TOLERANCES = Tolerances()
