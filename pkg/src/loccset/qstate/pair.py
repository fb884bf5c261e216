from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from ..errors import DimensionMismatchError
from .types import BipartitePureState, Ensemble


def _side_dims(states: tuple[BipartitePureState, ...], side: str) -> tuple[int, int]:
    dims = states[0].dims
    for k, s in enumerate(states):
        if s.dims != dims:
            raise DimensionMismatchError(f"{side}[{k}] has dims {s.dims}, expected {dims}")
    return dims


@dataclass(frozen=True, slots=True, eq=False)
class SetPair:
    """Input set ``S_ψ`` and output set ``S_φ``; ``inputs[i]`` should map to ``outputs[i]``."""

    inputs: tuple[BipartitePureState, ...]
    outputs: tuple[BipartitePureState, ...]

    def __post_init__(self) -> None:
        inputs = tuple(self.inputs)
        outputs = tuple(self.outputs)
        if len(inputs) == 0:
            raise ValueError("a set pair needs at least one input state")
        if len(inputs) != len(outputs):
            raise ValueError(f"got {len(inputs)} inputs but {len(outputs)} outputs")
        _side_dims(inputs, "inputs")
        _side_dims(outputs, "outputs")
        object.__setattr__(self, "inputs", inputs)
        object.__setattr__(self, "outputs", outputs)

    @property
    def n(self) -> int:
        return len(self.inputs)

    @property
    def input_dims(self) -> tuple[int, int]:
        return self.inputs[0].dims

    @property
    def output_dims(self) -> tuple[int, int]:
        return self.outputs[0].dims

    def ensembles(self, probs: np.ndarray) -> tuple[Ensemble, Ensemble]:
        """``(S_{ψ,p}, S_{φ,p})`` for a probability vector ``p``."""

        return Ensemble(probs, self.inputs), Ensemble(probs, self.outputs)

    @staticmethod
    def of(
        inputs: Sequence[BipartitePureState], outputs: Sequence[BipartitePureState]
    ) -> SetPair:
        return SetPair(tuple(inputs), tuple(outputs))
