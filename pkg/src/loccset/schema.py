"""JSON dialect for states, set pairs and exact amplitudes.

State documents
---------------
Dense form::

    {"dims": [2, 2], "amplitudes": [a00, a01, a10, a11]}

Sparse form (unlisted kets are zero)::

    {"dims": [4, 4], "terms": [{"ket": [0, 0], "num": 1, "sqrt": 2, "den": 2}, ...]}

An amplitude is a plain number, an ``[re, im]`` pair, or an exact object
``{"num", "den", "sqrt", "phase_sign", "imaginary"}`` meaning
``phase_sign * num * sqrt(sqrt) / den`` (times ``1j`` when ``imaginary``).
All keys but ``num`` are optional (defaults ``den=1``, ``sqrt=1``,
``phase_sign=1``, ``imaginary=false``).

Pair documents are ``{"inputs": [state, ...], "outputs": [state, ...]}``.
"""

from __future__ import annotations

import json
import math
from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import Any

import numpy as np

from .errors import CorpusSchemaError, DimensionMismatchError, NormalizationError
from .qstate import BipartitePureState, SetPair

_EXACT_KEYS = {"num", "den", "sqrt", "phase_sign", "imaginary"}


def _is_number(x: Any) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def parse_amplitude(obj: Any, *, field: str = "amplitude") -> complex:
    """Decode one amplitude (number, ``[re, im]`` or exact object)."""

    if _is_number(obj):
        return complex(float(obj))
    if isinstance(obj, Sequence) and not isinstance(obj, str):
        if len(obj) != 2 or not all(_is_number(x) for x in obj):
            raise CorpusSchemaError("amplitude pair must be [re, im] numbers", field=field)
        return complex(float(obj[0]), float(obj[1]))
    if isinstance(obj, Mapping):
        keys = set(obj) - {"ket"}
        unknown = keys - _EXACT_KEYS
        if unknown:
            raise CorpusSchemaError(f"unknown amplitude keys {sorted(unknown)}", field=field)
        if "num" not in obj:
            raise CorpusSchemaError("exact amplitude requires 'num'", field=field)
        num, den = obj["num"], obj.get("den", 1)
        root, sign = obj.get("sqrt", 1), obj.get("phase_sign", 1)
        if not all(_is_number(x) for x in (num, den, root)):
            raise CorpusSchemaError("num/den/sqrt must be numbers", field=field)
        if den == 0:
            raise CorpusSchemaError("den must be nonzero", field=field)
        if root < 0:
            raise CorpusSchemaError("sqrt must be non-negative", field=field)
        if sign not in (1, -1):
            raise CorpusSchemaError("phase_sign must be +1 or -1", field=field)
        value = sign * num * math.sqrt(root) / den
        return complex(0.0, value) if obj.get("imaginary", False) else complex(value, 0.0)
    raise CorpusSchemaError(f"cannot decode amplitude {obj!r}", field=field)


def _parse_dims(obj: Any, field: str) -> tuple[int, int]:
    dims = obj.get("dims") if isinstance(obj, Mapping) else None
    if (
        not isinstance(dims, Sequence)
        or len(dims) != 2
        or not all(isinstance(d, int) and not isinstance(d, bool) and d >= 1 for d in dims)
    ):
        raise CorpusSchemaError("dims must be [dA, dB] positive integers", field=f"{field}.dims")
    return int(dims[0]), int(dims[1])


def parse_state(obj: Any, *, field: str = "state") -> BipartitePureState:
    """Decode a state document; invariant failures become schema errors."""

    if not isinstance(obj, Mapping):
        raise CorpusSchemaError("state must be an object", field=field)
    dim_a, dim_b = _parse_dims(obj, field)
    has_dense, has_terms = "amplitudes" in obj, "terms" in obj
    if has_dense == has_terms:
        raise CorpusSchemaError("state needs exactly one of 'amplitudes' or 'terms'", field=field)

    amps = np.zeros(dim_a * dim_b, dtype=complex)
    if has_dense:
        dense = obj["amplitudes"]
        if not isinstance(dense, Sequence) or len(dense) != dim_a * dim_b:
            raise CorpusSchemaError(
                f"amplitudes must have dA*dB = {dim_a * dim_b} entries",
                field=f"{field}.amplitudes",
            )
        for k, a in enumerate(dense):
            amps[k] = parse_amplitude(a, field=f"{field}.amplitudes[{k}]")
    else:
        terms = obj["terms"]
        if not isinstance(terms, Sequence) or len(terms) == 0:
            raise CorpusSchemaError("terms must be a non-empty list", field=f"{field}.terms")
        for k, term in enumerate(terms):
            tfield = f"{field}.terms[{k}]"
            ket = term.get("ket") if isinstance(term, Mapping) else None
            if (
                not isinstance(ket, Sequence)
                or len(ket) != 2
                or not all(isinstance(x, int) for x in ket)
                or not (0 <= ket[0] < dim_a and 0 <= ket[1] < dim_b)
            ):
                raise CorpusSchemaError("ket must be [i, j] inside dims", field=f"{tfield}.ket")
            amps[ket[0] * dim_b + ket[1]] += parse_amplitude(term, field=tfield)

    try:
        return BipartitePureState(dim_a, dim_b, amps)
    except (NormalizationError, DimensionMismatchError) as exc:
        raise CorpusSchemaError(str(exc), field=field) from exc


def parse_state_list(obj: Any, *, field: str) -> list[BipartitePureState]:
    if not isinstance(obj, Sequence) or isinstance(obj, str) or len(obj) == 0:
        raise CorpusSchemaError("expected a non-empty list of states", field=field)
    return [parse_state(s, field=f"{field}[{k}]") for k, s in enumerate(obj)]


def parse_pair(obj: Any, *, field: str = "pair") -> SetPair:
    if not isinstance(obj, Mapping):
        raise CorpusSchemaError("pair must be an object", field=field)
    for key in ("inputs", "outputs"):
        if key not in obj:
            raise CorpusSchemaError(f"missing '{key}'", field=field)
    inputs = parse_state_list(obj["inputs"], field=f"{field}.inputs")
    outputs = parse_state_list(obj["outputs"], field=f"{field}.outputs")
    try:
        return SetPair.of(inputs, outputs)
    except (ValueError, DimensionMismatchError) as exc:
        raise CorpusSchemaError(str(exc), field=field) from exc


def loads_json(text: str, *, source: str = "$") -> Any:
    """Decode JSON text, turning decode errors into schema errors with a line number."""

    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CorpusSchemaError(exc.msg, field=source, line=exc.lineno) from exc


def read_json(path: str | Path) -> Any:
    return loads_json(Path(path).read_text(encoding="utf-8"), source=str(path))


def load_pair_file(path: str | Path) -> SetPair:
    """Load ``{"inputs": ..., "outputs": ...}`` or a single corpus fixture with a ``pair``."""

    doc = read_json(path)
    if isinstance(doc, Mapping) and "pair" in doc:
        return parse_pair(doc["pair"], field="pair")
    return parse_pair(doc, field="$")


def load_two_state_file(path: str | Path) -> tuple[BipartitePureState, BipartitePureState]:
    """Load ``{"input": state, "output": state}``."""

    doc = read_json(path)
    if not isinstance(doc, Mapping) or "input" not in doc or "output" not in doc:
        raise CorpusSchemaError("expected an object with 'input' and 'output' states", field="$")
    return parse_state(doc["input"], field="input"), parse_state(doc["output"], field="output")


def amplitude_to_json(a: complex) -> float | list[float]:
    a = complex(a)
    return float(a.real) if a.imag == 0.0 else [float(a.real), float(a.imag)]


def state_to_json(s: BipartitePureState) -> dict[str, Any]:
    """Dense encoding with plain numbers (``[re, im]`` for complex entries)."""

    return {"dims": [s.dim_a, s.dim_b], "amplitudes": [amplitude_to_json(a) for a in s.amplitudes]}


def pair_to_json(pair: SetPair) -> dict[str, Any]:
    return {
        "inputs": [state_to_json(s) for s in pair.inputs],
        "outputs": [state_to_json(s) for s in pair.outputs],
    }
