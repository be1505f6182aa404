"""Brute-force reference for the completion engine.

Everything here enumerates candidate windows one by one on plain Python
lists.  That is the point: this module must stay simple enough to audit by
eye and must not share machinery with the completion module, so no
summed-area tables and no vectorized shortcuts appear anywhere.  The one
concession to practicality is counting a window's ones by slicing rows
instead of XOR-ing full images, using the identity

    d = s*s + total_ones - 2 * ones_inside_window

whose correctness is itself checked (in the test suite) against a rescan
that walks the entire image per candidate.
"""

from fractions import Fraction

import numpy as np

from .masks import PatchCandidate

__all__ = [
    "oracle_complete_single",
    "oracle_complete_multi",
    "oracle_min_distance",
]


def _as_ratio(gamma):
    """gamma as an exact (numerator, denominator) pair; range-checked.

    Deliberately local: the oracle keeps its own arithmetic rather than
    importing the completion module's cutoff helper.
    """
    g = Fraction(gamma)
    if not 0 <= g < 1:
        raise ValueError(f"gamma must lie in [0, 1), got {gamma}")
    return g.numerator, g.denominator


def _as_bit_rows(mask):
    arr = np.asarray(mask)
    if arr.ndim != 2 or arr.size == 0:
        raise ValueError(f"mask must be a nonempty 2-D array, got shape {arr.shape}")
    rows = [[int(v) for v in row] for row in arr.tolist()]
    for row in rows:
        for v in row:
            if v not in (0, 1):
                raise ValueError("mask values must be exactly 0 or 1")
    return rows


def oracle_complete_single(observed, size, gamma) -> np.ndarray:
    """Reference completion: try every window, OR in the accepted ones."""
    num, den = _as_ratio(gamma)
    bits = _as_bit_rows(observed)
    H = len(bits)
    W = len(bits[0])
    s = int(size)
    if s < 1:
        raise ValueError(f"patch size must be >= 1, got {s}")
    out = [[0] * W for _ in range(H)]
    if s > H or s > W:
        return np.array(out, dtype=np.uint8)

    total = sum(sum(row) for row in bits)
    s_sq = s * s
    for i in range(H - s + 1):
        window_rows = bits[i : i + s]
        for j in range(W - s + 1):
            inside = 0
            for row in window_rows:
                inside += sum(row[j : j + s])
            dist = s_sq + total - 2 * inside
            # accept iff dist / s^2 <= num / den, in exact integer form
            if dist * den <= num * s_sq:
                for out_row in out[i : i + s]:
                    out_row[j : j + s] = [1] * s
    return np.array(out, dtype=np.uint8)


def oracle_complete_multi(observed, sizes, gamma) -> np.ndarray:
    """Union of single-size oracle completions over a size set."""
    _as_ratio(gamma)
    arr = np.asarray(observed)
    if arr.ndim != 2 or arr.size == 0:
        raise ValueError(f"mask must be a nonempty 2-D array, got shape {arr.shape}")
    out = np.zeros(arr.shape, dtype=np.uint8)
    for s in sizes:
        out |= oracle_complete_single(observed, s, gamma)
    return out


def oracle_min_distance(observed, size):
    """Smallest candidate distance and its first (row-major) argmin.

    Returns ``(distance, PatchCandidate)``.  Raises when no window of the
    requested size fits in the image.
    """
    bits = _as_bit_rows(observed)
    H = len(bits)
    W = len(bits[0])
    s = int(size)
    if s < 1:
        raise ValueError(f"patch size must be >= 1, got {s}")
    if s > H or s > W:
        raise ValueError(f"no {s}x{s} candidate fits in a {H}x{W} mask")

    total = sum(sum(row) for row in bits)
    s_sq = s * s
    best_dist = None
    best_cand = None
    for i in range(H - s + 1):
        window_rows = bits[i : i + s]
        for j in range(W - s + 1):
            inside = 0
            for row in window_rows:
                inside += sum(row[j : j + s])
            dist = s_sq + total - 2 * inside
            if best_dist is None or dist < best_dist:
                best_dist = dist
                best_cand = PatchCandidate(size=s, row=i, col=j)
    return best_dist, best_cand
