"""Set transformations that separate the operation classes.

A listed set can be mapped onto distinct computational product kets exactly
when the parties can first identify which member they hold, so the class
verdict of the transformation is the class verdict of discrimination.
"""

from __future__ import annotations

from ..qstate import BipartitePureState, SetPair
from .known_facts import KnownFactTable, default_known_facts
from .types import TriState


def separation_pair(fixture_id: str, *, table: KnownFactTable | None = None) -> SetPair:
    """Listed set as inputs, the first ``n`` kets ``|i⟩|j⟩`` (row-major) as outputs."""

    states = (table or default_known_facts()).states(fixture_id)
    dim_a, dim_b = states[0].dims
    if len(states) > dim_a * dim_b:
        raise ValueError(f"{fixture_id!r} has more states than product kets")
    outputs = [
        BipartitePureState.basis(k // dim_b, k % dim_b, dim_a, dim_b) for k in range(len(states))
    ]
    return SetPair.of(states, outputs)


def class_transformable(
    fixture_id: str, op_class: str, *, table: KnownFactTable | None = None
) -> TriState:
    """Whether :func:`separation_pair` is deterministically achievable under ``op_class``."""

    d = (table or default_known_facts()).lookup(fixture_id, op_class)
    if d.is_unknown:
        return TriState.unknown("identify-and-prepare", d.justification)
    verb = "can" if d.is_yes else "cannot"
    return TriState(
        d.value,
        "identify-and-prepare",
        f"the set {verb} be perfectly distinguished under {op_class} ({d.justification}); "
        "preparing product outputs needs nothing else",
    )
