"""JSON dialect for protocols.

::

    {"dims": [dA, dB], "depth": 2,
     "root": {"party": "A",
              "branches": [{"a_op": [[...], ...], "b_op": [[...], ...]}, ...],
              "children": [node | {"leaf": "label"} | null, ...]}}

Matrix entries use the amplitude forms of :mod:`loccset.schema`; dumps write
``[re, im]`` pairs. ``depth`` is optional on load and defaults to the tree's
actual depth.
"""

from __future__ import annotations

import json
from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import Any

import numpy as np

from ..errors import CorpusSchemaError, ProtocolStructureError
from ..schema import parse_amplitude, read_json
from .types import Child, Leaf, ProductKraus, Protocol, ProtocolNode


def _parse_matrix(obj: Any, field: str) -> np.ndarray:
    if not isinstance(obj, Sequence) or isinstance(obj, str) or len(obj) == 0:
        raise CorpusSchemaError("matrix must be a non-empty list of rows", field=field)
    rows = []
    for r, row in enumerate(obj):
        if not isinstance(row, Sequence) or isinstance(row, str):
            raise CorpusSchemaError("matrix row must be a list", field=f"{field}[{r}]")
        rows.append([parse_amplitude(a, field=f"{field}[{r}][{c}]") for c, a in enumerate(row)])
    if any(len(row) != len(rows) for row in rows):
        raise CorpusSchemaError("matrix must be square", field=field)
    return np.array(rows, dtype=complex)


def _parse_child(obj: Any, field: str) -> Child:
    if obj is None:
        return None
    if isinstance(obj, Mapping) and "leaf" in obj:
        label = obj["leaf"]
        return Leaf(None if label is None else str(label))
    return _parse_node(obj, field)


def _parse_node(obj: Any, field: str) -> ProtocolNode:
    if not isinstance(obj, Mapping):
        raise CorpusSchemaError("node must be an object", field=field)
    branches_raw = obj.get("branches")
    if not isinstance(branches_raw, Sequence) or isinstance(branches_raw, str):
        raise CorpusSchemaError("node needs a list of branches", field=f"{field}.branches")
    branches = []
    for k, br in enumerate(branches_raw):
        bfield = f"{field}.branches[{k}]"
        if not isinstance(br, Mapping) or "a_op" not in br or "b_op" not in br:
            raise CorpusSchemaError("branch needs a_op and b_op", field=bfield)
        branches.append(
            ProductKraus(
                _parse_matrix(br["a_op"], f"{bfield}.a_op"),
                _parse_matrix(br["b_op"], f"{bfield}.b_op"),
            )
        )
    children_raw = obj.get("children", [])
    if not isinstance(children_raw, Sequence) or isinstance(children_raw, str):
        raise CorpusSchemaError("children must be a list", field=f"{field}.children")
    children = tuple(
        _parse_child(c, f"{field}.children[{k}]") for k, c in enumerate(children_raw)
    )
    try:
        return ProtocolNode(str(obj.get("party", "")), tuple(branches), children)
    except ProtocolStructureError as exc:
        raise CorpusSchemaError(str(exc), field=field) from exc


def parse_protocol(doc: Any) -> Protocol:
    if not isinstance(doc, Mapping) or "root" not in doc:
        raise CorpusSchemaError("protocol document needs a 'root' node", field="$")
    root = _parse_node(doc["root"], "root")
    dims = doc.get("dims", list(root.dims))
    if not isinstance(dims, Sequence) or len(dims) != 2:
        raise CorpusSchemaError("dims must be [dA, dB]", field="dims")
    try:
        return Protocol((int(dims[0]), int(dims[1])), root, int(doc.get("depth", root.height)))
    except ProtocolStructureError as exc:
        raise CorpusSchemaError(str(exc), field="$") from exc


def load_protocol(path: str | Path) -> Protocol:
    return parse_protocol(read_json(path))


def _matrix_to_json(m: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(m)]


def _child_to_json(c: Child) -> Any:
    if c is None:
        return None
    if isinstance(c, Leaf):
        return {"leaf": c.label}
    return _node_to_json(c)


def _node_to_json(node: ProtocolNode) -> dict[str, Any]:
    return {
        "party": node.party,
        "branches": [
            {"a_op": _matrix_to_json(br.a_op), "b_op": _matrix_to_json(br.b_op)}
            for br in node.branches
        ],
        "children": [_child_to_json(c) for c in node.children],
    }


def protocol_to_json(p: Protocol) -> dict[str, Any]:
    return {"dims": list(p.dims), "depth": p.depth, "root": _node_to_json(p.root)}


def dump_protocol(p: Protocol, path: str | Path) -> None:
    Path(path).write_text(json.dumps(protocol_to_json(p), indent=2) + "\n", encoding="utf-8")
