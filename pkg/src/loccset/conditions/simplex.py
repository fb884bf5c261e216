"""Points of the open probability simplex.

The necessary conditions quantify over every probability vector with strictly
positive entries. We approximate that continuum with the interior points of a
uniform composition grid followed by seeded Dirichlet samples; the order of
emission is fixed so "first violation" is reproducible.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np
import scipy.special

SUM_TOL = 1e-12


@dataclass(frozen=True, slots=True, eq=False)
class SimplexPoint:
    """Probability vector with every entry in (0, 1)."""

    probs: np.ndarray

    def __post_init__(self) -> None:
        p = np.array(self.probs, dtype=float).reshape(-1)
        if p.shape[0] < 1:
            raise ValueError("simplex point needs at least one entry")
        if p.shape[0] > 1 and (np.any(p <= 0.0) or np.any(p >= 1.0)):
            raise ValueError(f"simplex point must be strictly interior, got {p.tolist()}")
        if abs(float(p.sum()) - 1.0) > SUM_TOL:
            raise ValueError(f"simplex point sums to {p.sum():.17g}")
        p.setflags(write=False)
        object.__setattr__(self, "probs", p)

    @property
    def n(self) -> int:
        return int(self.probs.shape[0])

    def to_list(self) -> list[float]:
        return [float(x) for x in self.probs]


def _check(n: int, resolution: int) -> None:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if resolution < 2:
        raise ValueError(f"resolution must be >= 2, got {resolution}")


def grid_size(n: int, resolution: int) -> int:
    """Number of interior grid points, ``C(resolution - 1, n - 1)``."""

    _check(n, resolution)
    return int(scipy.special.comb(resolution - 1, n - 1, exact=True))


def interior_grid(n: int, resolution: int) -> Iterator[SimplexPoint]:
    """Strictly positive compositions of ``resolution`` into ``n`` parts, divided by it.

    Emitted in lexicographic order of the cut positions, so for ``n=2`` the
    first entry increases.
    """

    _check(n, resolution)
    for cuts in itertools.combinations(range(1, resolution), n - 1):
        edges = np.array((0, *cuts, resolution), dtype=float)
        yield SimplexPoint(np.diff(edges) / resolution)


def random_interior(n: int, samples: int, *, seed: int = 0) -> Iterator[SimplexPoint]:
    """``samples`` uniform (flat Dirichlet) interior points from a seeded generator."""

    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if samples < 0:
        raise ValueError(f"samples must be >= 0, got {samples}")
    rng = np.random.default_rng(seed)
    emitted = 0
    while emitted < samples:
        p = rng.dirichlet(np.ones(n))
        p = p / p.sum()
        # Underflow can put an entry at exactly 0 or 1; such draws are skipped.
        if np.any(p <= 0.0) or np.any(p >= 1.0):
            continue
        emitted += 1
        yield SimplexPoint(p)


def simplex_grid(
    n: int, resolution: int, *, samples: int = 0, seed: int = 0
) -> Iterator[SimplexPoint]:
    """Grid points first, then ``samples`` seeded random points."""

    yield from interior_grid(n, resolution)
    if samples:
        yield from random_interior(n, samples, seed=seed)
