from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ..configs import DEFAULT_TOLERANCES
from ..qstate import BipartitePureState, squared_schmidt_coefficients

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True, eq=False)
class NielsenVerdict:
    """Outcome of the Nielsen partial-sum test for ``input → output``.

    ``first_violating_l`` is 1-based (the ``l`` of the partial sum that fails).
    """

    holds: bool
    first_violating_l: int | None
    partial_sums_in: np.ndarray
    partial_sums_out: np.ndarray

    @property
    def margin(self) -> float:
        """Smallest slack ``out[l] - in[l]``; negative iff some partial sum fails."""

        return float(np.min(self.partial_sums_out - self.partial_sums_in))

    def to_dict(self) -> dict:
        return {
            "holds": bool(self.holds),
            "first_violating_l": self.first_violating_l,
            "partial_sums_in": [float(x) for x in self.partial_sums_in],
            "partial_sums_out": [float(x) for x in self.partial_sums_out],
            "margin": self.margin,
        }


def majorizes(x: np.ndarray, y: np.ndarray, *, tol: float = DEFAULT_TOLERANCES.comparison) -> bool:
    """True iff ``x ≺ y`` (``y`` majorizes ``x``) for probability vectors.

    Vectors are sorted nonincreasing and zero-padded to a common length.
    """

    n = max(len(x), len(y))
    xs = np.zeros(n)
    ys = np.zeros(n)
    xs[: len(x)] = np.sort(np.asarray(x, dtype=float))[::-1]
    ys[: len(y)] = np.sort(np.asarray(y, dtype=float))[::-1]
    return bool(np.all(np.cumsum(xs) <= np.cumsum(ys) + tol))


def majorization_check(
    input: BipartitePureState,
    output: BipartitePureState,
    *,
    tol: float = DEFAULT_TOLERANCES.comparison,
) -> NielsenVerdict:
    """Nielsen criterion for deterministic LOCC conversion ``input → output``.

    Holds iff every partial sum of the input's squared Schmidt coefficients is
    at most the corresponding partial sum of the output's.
    """

    n = max(min(input.dims), min(output.dims))
    lam_in = squared_schmidt_coefficients(input, length=n)
    lam_out = squared_schmidt_coefficients(output, length=n)
    ps_in = np.cumsum(lam_in)
    ps_out = np.cumsum(lam_out)

    bad = np.flatnonzero(ps_in > ps_out + tol)
    first = int(bad[0]) + 1 if bad.size else None
    verdict = NielsenVerdict(
        holds=first is None,
        first_violating_l=first,
        partial_sums_in=ps_in,
        partial_sums_out=ps_out,
    )
    logger.debug("majorization holds=%s first_violating_l=%s", verdict.holds, first)
    return verdict
