"""Binary mask primitives: validation, popcounts, summed-area tables, and
exact Hamming distances to square candidate windows.

All masks are 2-D numpy arrays with values in {0, 1} (dtype uint8 by
convention).  Every count and distance in this module is computed in plain
integer arithmetic; no floating point is involved anywhere.
"""

from typing import NamedTuple

import numpy as np

__all__ = [
    "PatchCandidate",
    "as_mask",
    "popcount",
    "union",
    "intersection",
    "integral_image",
    "window_sum",
    "hamming_to_candidate",
]


class PatchCandidate(NamedTuple):
    """An s-by-s square window with top-left corner at (row, col)."""

    size: int
    row: int
    col: int


def as_mask(a) -> np.ndarray:
    """Validate an array-like as a binary mask and return it as uint8.

    Parameters
    ----------
    a : array-like
        2-D array whose entries are all 0 or 1 (bools are accepted).

    Returns
    -------
    ndarray
        The same data as a uint8 array.  No copy is made when the input
        already is a valid uint8 array.
    """
    arr = np.asarray(a)
    if arr.ndim != 2:
        raise ValueError(f"mask must be 2-D, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError("mask must have at least one pixel")
    if arr.dtype == bool:
        return arr.astype(np.uint8)
    if not np.issubdtype(arr.dtype, np.integer):
        raise ValueError(f"mask dtype must be integer or bool, got {arr.dtype}")
    if not np.all((arr == 0) | (arr == 1)):
        raise ValueError("mask values must be exactly 0 or 1")
    return arr.astype(np.uint8, copy=False)


def popcount(mask) -> int:
    """Number of 1-bits in the mask."""
    return int(as_mask(mask).sum(dtype=np.int64))


def _check_same_shape(a, b):
    if a.shape != b.shape:
        raise ValueError(f"mask dimensions differ: {a.shape} vs {b.shape}")


def union(a, b) -> np.ndarray:
    """Element-wise OR of two equal-size masks."""
    a = as_mask(a)
    b = as_mask(b)
    _check_same_shape(a, b)
    return a | b


def intersection(a, b) -> np.ndarray:
    """Element-wise AND of two equal-size masks."""
    a = as_mask(a)
    b = as_mask(b)
    _check_same_shape(a, b)
    return a & b


def integral_image(mask) -> np.ndarray:
    """Summed-area table of a binary mask.

    Parameters
    ----------
    mask : array-like
        H×W binary mask.

    Returns
    -------
    ndarray
        (H+1)×(W+1) int64 array ``S`` with ``S[i, j]`` equal to the number
        of 1-bits in ``mask[:i, :j]``.  Row 0 and column 0 are all zero, so
        any rectangle sum needs exactly four lookups and no bounds special
        cases.
    """
    m = as_mask(mask)
    H, W = m.shape
    out = np.zeros((H + 1, W + 1), dtype=np.int64)
    np.cumsum(m, axis=0, dtype=np.int64, out=out[1:, 1:])
    np.cumsum(out[1:, 1:], axis=1, out=out[1:, 1:])
    return out


def _candidate_bounds(integral, cand):
    s, i, j = cand
    H = integral.shape[0] - 1
    W = integral.shape[1] - 1
    if s < 1:
        raise ValueError(f"candidate size must be >= 1, got {s}")
    if not (0 <= i <= H - s and 0 <= j <= W - s):
        raise ValueError(
            f"candidate (size={s}, row={i}, col={j}) is not fully contained "
            f"in a {H}x{W} mask"
        )
    return s, i, j


def window_sum(integral, cand) -> int:
    """Number of 1-bits of the source mask inside a candidate window.

    ``integral`` is the table produced by :func:`integral_image`; ``cand``
    is a :class:`PatchCandidate` (any (size, row, col) triple works).  The
    sum is read off with the standard four-corner lookup.
    """
    s, i, j = _candidate_bounds(integral, cand)
    return int(
        integral[i + s, j + s]
        - integral[i, j + s]
        - integral[i + s, j]
        + integral[i, j]
    )


def hamming_to_candidate(integral, total_ones, cand) -> int:
    """Exact Hamming distance from the source mask to a filled s×s window.

    Uses the closed form ``s**2 + total_ones - 2 * window_sum``: bits inside
    the window disagree where the mask is 0, bits outside disagree where the
    mask is 1.

    Parameters
    ----------
    integral : ndarray
        Summed-area table of the source mask.
    total_ones : int
        Popcount of the source mask (``integral[-1, -1]``).
    cand : PatchCandidate
        Fully-contained candidate window.
    """
    s, _, _ = _candidate_bounds(integral, cand)
    inside = window_sum(integral, cand)
    return s * s + int(total_ones) - 2 * inside
