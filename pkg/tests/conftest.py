"""Shared helpers for the test suite."""

from collections import deque

import numpy as np
import pytest


def random_mask(rng, height, width, density=0.5):
    """Random binary mask with roughly the given fill density."""
    return (rng.random((height, width)) < density).astype(np.uint8)


def planted_patch(rng, height, width, size, flips=0):
    """A square patch at a random spot, with ``flips`` random bits toggled."""
    mask = np.zeros((height, width), dtype=np.uint8)
    row = int(rng.integers(0, height - size + 1))
    col = int(rng.integers(0, width - size + 1))
    mask[row : row + size, col : col + size] = 1
    if flips:
        idx = rng.choice(height * width, size=flips, replace=False)
        mask.flat[idx] ^= 1
    return mask


def component_count(mask):
    """Number of 4-connected components of 1-pixels."""
    mask = np.asarray(mask)
    seen = np.zeros(mask.shape, dtype=bool)
    count = 0
    for start_r, start_c in zip(*np.nonzero(mask)):
        if seen[start_r, start_c]:
            continue
        count += 1
        queue = deque([(start_r, start_c)])
        seen[start_r, start_c] = True
        while queue:
            r, c = queue.popleft()
            for rr, cc in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if (
                    0 <= rr < mask.shape[0]
                    and 0 <= cc < mask.shape[1]
                    and mask[rr, cc]
                    and not seen[rr, cc]
                ):
                    seen[rr, cc] = True
                    queue.append((rr, cc))
    return count


@pytest.fixture
def rng():
    """Fresh deterministic generator per test."""
    return np.random.default_rng(0xA11CE)
