"""Finite LOCC protocol trees.

A node belongs to one acting party. Each branch is a product operator
``A ⊗ B`` whose acting-party factor is that party's Kraus operator for the
outcome, and whose other factor is the unitary correction the passive party
applies after hearing the outcome. Completeness is therefore checked on the
acting side only (``Σ K†K = I``) together with unitarity of every correction.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import Literal, TypeAlias

import numpy as np

from ..errors import DimensionMismatchError, ProtocolStructureError
from ..qstate import BipartitePureState, apply_product

Party = Literal["A", "B"]
PARTIES: tuple[str, ...] = ("A", "B")


def _frozen_matrix(m: np.ndarray, name: str) -> np.ndarray:
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ProtocolStructureError(f"{name} must be a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ProtocolStructureError(f"{name} has non-finite entries")
    a.setflags(write=False)
    return a


@dataclass(frozen=True, slots=True, eq=False)
class ProductKraus:
    a_op: np.ndarray
    b_op: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "a_op", _frozen_matrix(self.a_op, "a_op"))
        object.__setattr__(self, "b_op", _frozen_matrix(self.b_op, "b_op"))

    @property
    def dims(self) -> tuple[int, int]:
        return (int(self.a_op.shape[0]), int(self.b_op.shape[0]))

    def acting(self, party: str) -> np.ndarray:
        return self.a_op if party == "A" else self.b_op

    def passive(self, party: str) -> np.ndarray:
        return self.b_op if party == "A" else self.a_op

    def apply(self, state: BipartitePureState) -> np.ndarray:
        """Unnormalised ``(A ⊗ B)|ψ⟩``."""

        return apply_product(self.a_op, self.b_op, state.amplitudes, state.dims)

    def full(self) -> np.ndarray:
        return np.kron(self.a_op, self.b_op)

    @staticmethod
    def identity(dim_a: int, dim_b: int) -> ProductKraus:
        return ProductKraus(np.eye(dim_a), np.eye(dim_b))


@dataclass(frozen=True, slots=True)
class Leaf:
    """End of a path; ``label`` names the output the path should produce."""

    label: str | None = None


Child: TypeAlias = "ProtocolNode | Leaf | None"


@dataclass(frozen=True, slots=True, eq=False)
class ProtocolNode:
    party: str
    branches: tuple[ProductKraus, ...]
    children: tuple[Child, ...] = ()

    def __post_init__(self) -> None:
        if self.party not in PARTIES:
            raise ProtocolStructureError(f"party must be 'A' or 'B', got {self.party!r}")
        branches = tuple(self.branches)
        if not branches:
            raise ProtocolStructureError("a protocol node needs at least one branch")
        children = tuple(self.children) if self.children else (None,) * len(branches)
        if len(children) != len(branches):
            raise ProtocolStructureError(
                f"node has {len(branches)} branches but {len(children)} children"
            )
        dims = branches[0].dims
        for k, br in enumerate(branches):
            if br.dims != dims:
                raise ProtocolStructureError(f"branch {k} acts on {br.dims}, expected {dims}")
        object.__setattr__(self, "branches", branches)
        object.__setattr__(self, "children", children)

    @property
    def dims(self) -> tuple[int, int]:
        return self.branches[0].dims

    @property
    def height(self) -> int:
        """Number of measurement rounds on the longest path below and including this node."""

        below = [c.height for c in self.children if isinstance(c, ProtocolNode)]
        return 1 + max(below, default=0)


def walk(
    node: ProtocolNode, path: tuple[int, ...] = ()
) -> Iterator[tuple[tuple[int, ...], ProtocolNode]]:
    """Depth-first ``(path, node)`` pairs."""

    yield path, node
    for k, child in enumerate(node.children):
        if isinstance(child, ProtocolNode):
            yield from walk(child, (*path, k))


def path_name(path: Sequence[int]) -> str:
    return "/".join(["root", *(str(k) for k in path)])


@dataclass(frozen=True, slots=True, eq=False)
class Protocol:
    """Protocol tree on a ``dims`` system with declared maximum ``depth``."""

    dims: tuple[int, int]
    root: ProtocolNode
    depth: int

    def __post_init__(self) -> None:
        dims = (int(self.dims[0]), int(self.dims[1]))
        for path, node in walk(self.root):
            if node.dims != dims:
                raise ProtocolStructureError(
                    f"node {path_name(path)} acts on {node.dims}, protocol dims are {dims}"
                )
        if self.depth < 1:
            raise ProtocolStructureError(f"depth must be >= 1, got {self.depth}")
        if self.root.height > self.depth:
            raise ProtocolStructureError(
                f"tree has {self.root.height} rounds but declared depth is {self.depth}"
            )
        object.__setattr__(self, "dims", dims)

    @staticmethod
    def of(root: ProtocolNode) -> Protocol:
        """Wrap ``root`` with its dims and actual depth."""

        return Protocol(root.dims, root, root.height)

    @staticmethod
    def identity(dim_a: int, dim_b: int) -> Protocol:
        root = ProtocolNode("A", (ProductKraus.identity(dim_a, dim_b),), (Leaf(),))
        return Protocol((dim_a, dim_b), root, 1)

    def check_dims(self, state: BipartitePureState) -> None:
        if state.dims != self.dims:
            raise DimensionMismatchError(
                f"protocol acts on {self.dims} but state has dims {state.dims}"
            )


@dataclass(frozen=True, slots=True, eq=False)
class BranchOutcome:
    """One surviving leaf: its probability, normalised post-state and branch path."""

    probability: float
    post_state: BipartitePureState
    path: tuple[int, ...]
    label: str | None = None

    def to_dict(self) -> dict:
        return {"probability": self.probability, "path": list(self.path), "label": self.label}
