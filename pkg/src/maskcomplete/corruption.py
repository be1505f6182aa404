"""Seeded corruption of ground-truth patch masks.

Each model produces an observation at a bounded Hamming distance from the
input, emulating the ways an upstream detector under-segments a patch:
random bit noise, eaten boundaries, spill-over around the edge, or a missed
interior region.  All randomness flows through numpy's PCG64 generator
seeded from the model, so identical inputs give bitwise identical outputs.
"""

import enum
from dataclasses import dataclass, replace

import numpy as np

from .completion import complete_single_size, distance_cutoff
from .masks import as_mask

__all__ = [
    "DEFAULT_SEED",
    "CorruptionKind",
    "CorruptionModel",
    "CorruptionOutcome",
    "TrialRecord",
    "corrupt",
    "corrupt_outcome",
    "guarantee_trial",
]

DEFAULT_SEED = 0xC0FFEE


class CorruptionKind(enum.Enum):
    UNIFORM_FLIP = "uniform-flip"
    ERODE_BOUNDARY = "erode-boundary"
    DILATE_OUTSIDE = "dilate-outside"
    SPLIT_HOLE = "split-hole"


@dataclass(frozen=True)
class CorruptionModel:
    """A corruption kind with its Hamming budget and rng seed."""

    kind: CorruptionKind
    budget: int
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        object.__setattr__(self, "kind", CorruptionKind(self.kind))
        if self.budget < 0:
            raise ValueError(f"budget must be >= 0, got {self.budget}")


@dataclass(frozen=True)
class CorruptionOutcome:
    """Corrupted mask plus the exact damage done."""

    mask: np.ndarray
    hamming: int
    clamped: bool
    seed: int


@dataclass(frozen=True)
class TrialRecord:
    """One coverage-guarantee trial (see :func:`guarantee_trial`)."""

    size: int
    canvas: tuple
    gamma: float
    kind: CorruptionKind
    budget: int
    seed: int
    patch_row: int
    patch_col: int
    hamming: int
    clamped: bool
    within_budget: bool
    passed: bool


def _shift_down(m):
    out = np.zeros_like(m)
    out[1:] = m[:-1]
    return out


def _shift_up(m):
    out = np.zeros_like(m)
    out[:-1] = m[1:]
    return out


def _shift_right(m):
    out = np.zeros_like(m)
    out[:, 1:] = m[:, :-1]
    return out


def _shift_left(m):
    out = np.zeros_like(m)
    out[:, :-1] = m[:, 1:]
    return out


def _inner_boundary(mask):
    """1-pixels with a 4-neighbor equal to 0 (image border counts as 0)."""
    core = mask.astype(bool)
    interior = (
        core
        & _shift_down(core)
        & _shift_up(core)
        & _shift_right(core)
        & _shift_left(core)
    )
    return core & ~interior


def _outer_boundary(mask):
    """0-pixels 4-adjacent to some 1-pixel."""
    core = mask.astype(bool)
    near = (
        _shift_down(core) | _shift_up(core) | _shift_right(core) | _shift_left(core)
    )
    return near & ~core


def _uniform_flip(mask, budget, rng):
    out = mask.copy()
    n = out.size
    take = min(budget, n)
    idx = rng.choice(n, size=take, replace=False)
    out.flat[idx] ^= 1
    return out, take, take < budget


def _erode_boundary(mask, budget, rng):
    # Peel boundary pixels layer by layer until the budget (or the patch)
    # is exhausted; each removal is an exact 1 -> 0 flip.
    out = mask.copy()
    removed = 0
    while removed < budget:
        candidates = np.flatnonzero(_inner_boundary(out))
        if candidates.size == 0:
            break
        take = min(budget - removed, candidates.size)
        chosen = rng.choice(candidates, size=take, replace=False)
        out.flat[chosen] = 0
        removed += take
    return out, removed, removed < budget


def _dilate_outside(mask, budget, rng):
    out = mask.copy()
    added = 0
    while added < budget:
        candidates = np.flatnonzero(_outer_boundary(out))
        if candidates.size == 0:
            break
        take = min(budget - added, candidates.size)
        chosen = rng.choice(candidates, size=take, replace=False)
        out.flat[chosen] = 1
        added += take
    return out, added, added < budget


def _split_hole(mask, budget, rng):
    # Clear a rectangle strictly inside the patch bounding box, sized as
    # close to the budget as the interior allows.
    rows = np.flatnonzero(mask.any(axis=1))
    cols = np.flatnonzero(mask.any(axis=0))
    r0, r1 = int(rows[0]), int(rows[-1])
    c0, c1 = int(cols[0]), int(cols[-1])
    int_h = (r1 - r0 + 1) - 2
    int_w = (c1 - c0 + 1) - 2
    if budget == 0 or int_h < 1 or int_w < 1:
        return mask.copy(), 0, budget > 0

    want_h = max(1, int(np.sqrt(budget)))
    want_w = max(1, budget // want_h)
    hole_h = min(want_h, int_h)
    # after clamping the height, let the width regrow into the leftover budget
    hole_w = min(max(want_w, budget // hole_h), int_w)
    clamped = hole_h * hole_w < want_h * want_w

    top = int(rng.integers(r0 + 1, r1 - hole_h + 1))
    left = int(rng.integers(c0 + 1, c1 - hole_w + 1))
    out = mask.copy()
    region = out[top : top + hole_h, left : left + hole_w]
    cleared = int(region.sum(dtype=np.int64))
    region[...] = 0
    return out, cleared, clamped


_APPLY = {
    CorruptionKind.UNIFORM_FLIP: _uniform_flip,
    CorruptionKind.ERODE_BOUNDARY: _erode_boundary,
    CorruptionKind.DILATE_OUTSIDE: _dilate_outside,
    CorruptionKind.SPLIT_HOLE: _split_hole,
}


def corrupt_outcome(gt_mask, model) -> CorruptionOutcome:
    """Corrupt a ground-truth mask, reporting the exact Hamming damage.

    The output differs from the input in at most ``model.budget`` pixels.
    When the budget exceeds what the relevant region can absorb (e.g.
    eroding more pixels than the patch has), the damage is clamped and
    flagged.
    """
    mask = as_mask(gt_mask)
    if model.kind is not CorruptionKind.UNIFORM_FLIP and not mask.any():
        raise ValueError(f"{model.kind.value} requires a nonzero ground-truth mask")
    rng = np.random.default_rng(model.seed)
    out, hamming, clamped = _APPLY[model.kind](mask, model.budget, rng)
    return CorruptionOutcome(
        mask=out, hamming=int(hamming), clamped=bool(clamped), seed=model.seed
    )


def corrupt(gt_mask, model) -> np.ndarray:
    """Corrupted observation of ``gt_mask`` (see :func:`corrupt_outcome`)."""
    return corrupt_outcome(gt_mask, model).mask


def guarantee_trial(s, canvas, gamma, model) -> TrialRecord:
    """One randomized check of the coverage guarantee.

    Places an s-by-s patch uniformly at random on the canvas, corrupts it
    with the model, completes the corrupted observation at ``gamma``, and
    passes iff the completion covers every ground-truth pixel.  Whenever
    the corruption stayed within floor(gamma * s**2), a failure here means
    the completion itself is broken.
    """
    H, W = int(canvas[0]), int(canvas[1])
    s = int(s)
    if s > H or s > W:
        raise ValueError(f"patch size {s} does not fit a {H}x{W} canvas")

    rng = np.random.default_rng(model.seed)
    row = int(rng.integers(0, H - s + 1))
    col = int(rng.integers(0, W - s + 1))
    gt = np.zeros((H, W), dtype=np.uint8)
    gt[row : row + s, col : col + s] = 1

    sub_seed = int(rng.integers(0, 2**63))
    outcome = corrupt_outcome(gt, replace(model, seed=sub_seed))
    completed = complete_single_size(outcome.mask, s, gamma)
    covered = not np.any(gt & ~completed)

    return TrialRecord(
        size=s,
        canvas=(H, W),
        gamma=float(gamma),
        kind=model.kind,
        budget=model.budget,
        seed=model.seed,
        patch_row=row,
        patch_col=col,
        hamming=outcome.hamming,
        clamped=outcome.clamped,
        within_budget=outcome.hamming <= distance_cutoff(gamma, s),
        passed=bool(covered),
    )
