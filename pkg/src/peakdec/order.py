"""Interleaved index orders that linearize the pseudo-symmetry constraint.

A peak centered on bin ``center`` with direction ``direction`` (+1 or -1)
requires magnitudes to be nonincreasing along the order
``center, center+d, center-d, center+2d, center-2d, ...`` with
out-of-range indices skipped; after one spectrum boundary is passed the
order runs monotonically to the other boundary.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from peakdec import _kernels


@dataclass(frozen=True)
class IndexOrder:
    """A permutation of 0..k_max encoding one monotone chain."""

    sequence: np.ndarray
    center: int
    direction: int
    k_max: int

    def __post_init__(self):
        seq = np.asarray(self.sequence, dtype=np.int64)
        if seq.shape != (self.k_max + 1,):
            raise ValueError("sequence length must be k_max + 1")
        seq = seq.copy()
        seq.flags.writeable = False
        object.__setattr__(self, "sequence", seq)


def build_index_order(center: int, direction: int, k_max: int) -> IndexOrder:
    """Materialize the chain order for one (center, direction) pair.

    The walk grows a contiguous interval around ``center`` outward, the
    ``direction`` side first at each distance, so every prefix of the
    sequence covers an unbroken index range.
    """
    center = int(center)
    k_max = int(k_max)
    if k_max < 1:
        raise ValueError(f"k_max must be a positive integer, got {k_max}")
    if not 0 <= center <= k_max:
        raise ValueError(f"center bin {center} outside [0, {k_max}]")
    if direction not in (-1, 1):
        raise ValueError(f"direction must be +1 or -1, got {direction}")
    seq = _kernels.build_order(center, direction, k_max)
    return IndexOrder(sequence=seq, center=center, direction=int(direction), k_max=k_max)
