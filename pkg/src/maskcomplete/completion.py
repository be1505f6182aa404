"""Shape completion for binary patch masks.

Given an observed mask, the completion at threshold ``gamma`` is the union
of every fully-contained s-by-s window whose filled square differs from the
observation in at most ``gamma * s**2`` pixels.  Any ground-truth square
patch within that Hamming budget of the observation is therefore covered
entirely by the output, and the output contains nothing outside the union
of qualifying windows.

The implementation runs in time linear in the image area, independent of s:
one summed-area table turns every candidate distance into a four-corner
lookup, and a second summed-area table over the acceptance matrix turns
"is this pixel inside some accepted window" into another four-corner
lookup.
"""

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .masks import as_mask, integral_image, popcount, union

__all__ = [
    "GammaSchedule",
    "CandidateField",
    "CompletionReport",
    "normalize_sizes",
    "distance_cutoff",
    "candidate_field",
    "complete_single_size",
    "complete_multi_size",
    "complete_fixed_gamma",
    "gamma_search",
    "final_mask",
    "apply_mask",
]


def _exact_gamma(gamma) -> Fraction:
    """Validate gamma and return its exact value as a Fraction.

    Floats are taken at their exact binary value; Fractions pass through
    unchanged.  Anything outside [0, 1) is rejected -- at gamma >= 1 every
    placement of the patch would qualify and the completion would be the
    whole image, which is never useful.
    """
    if isinstance(gamma, Fraction):
        g = gamma
    elif isinstance(gamma, (bool, np.bool_)):
        raise TypeError("gamma must be a number, not a bool")
    elif isinstance(gamma, (int, np.integer)):
        g = Fraction(int(gamma))
    elif isinstance(gamma, (float, np.floating)):
        g = Fraction(float(gamma))
    else:
        raise TypeError(f"gamma must be float or Fraction, got {type(gamma)!r}")
    if not 0 <= g < 1:
        raise ValueError(f"gamma must lie in [0, 1), got {gamma}")
    return g


def distance_cutoff(gamma, size) -> int:
    """Largest integer d with d / size**2 <= gamma, computed exactly.

    A candidate window is accepted iff its Hamming distance is <= this
    cutoff; precomputing the integer removes all per-candidate rounding
    concerns.
    """
    return int(_exact_gamma(gamma) * (int(size) * int(size)))


def normalize_sizes(sizes) -> tuple:
    """Canonicalize a collection of patch sizes: ints >= 1, strictly increasing."""
    out = tuple(sorted(int(s) for s in sizes))
    for s in out:
        if s < 1:
            raise ValueError(f"patch sizes must be >= 1, got {s}")
    if len(set(out)) != len(out):
        raise ValueError(f"duplicate patch sizes in {sizes}")
    return out


@dataclass(frozen=True)
class GammaSchedule:
    """Geometric threshold schedule gamma_t = 1 - alpha * beta**(t-1).

    The schedule starts tight (t=1) and relaxes toward 1 without ever
    reaching it.  Parameters are interpreted at their shortest decimal
    representation, so the default first step is exactly 1 - 9/10 = 1/10.
    """

    alpha: float = 0.9
    beta: float = 0.7
    t_max: int = 15

    def __post_init__(self):
        if not 0 < self.alpha < 1:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha}")
        if not 0 < self.beta < 1:
            raise ValueError(f"beta must lie in (0, 1), got {self.beta}")
        if self.t_max < 1:
            raise ValueError(f"t_max must be >= 1, got {self.t_max}")

    def gamma(self, t: int) -> Fraction:
        """Exact threshold for step t (1-based)."""
        if not 1 <= t <= self.t_max:
            raise ValueError(f"step must lie in [1, {self.t_max}], got {t}")
        a = Fraction(str(self.alpha))
        b = Fraction(str(self.beta))
        return 1 - a * b ** (t - 1)

    def gammas(self) -> tuple:
        """All thresholds gamma_1 < gamma_2 < ... < gamma_t_max."""
        return tuple(self.gamma(t) for t in range(1, self.t_max + 1))


@dataclass(frozen=True)
class CandidateField:
    """Acceptance state of every candidate window of one size.

    accept[i, j] is 1 iff the window with top-left corner (i, j) lies within
    the distance cutoff; cover_count[i, j] counts the accepted windows that
    contain pixel (i, j).  The completion for this size is cover_count >= 1.
    """

    size: int
    accept: np.ndarray
    cover_count: np.ndarray


@dataclass(frozen=True)
class CompletionReport:
    """Outcome of a completion run."""

    attack_found: bool
    gamma_used: float | None
    iterations_run: int
    per_size_accepted: dict
    skipped_sizes: tuple = ()
    output_popcount: int = 0


def candidate_field(observed, size, gamma):
    """Evaluate every candidate window of one size against the observation.

    Returns a :class:`CandidateField`, or None when ``size`` exceeds an
    image dimension (no window fits, so there is nothing to evaluate).
    Gamma is validated either way.
    """
    mask = as_mask(observed)
    g = _exact_gamma(gamma)
    s = int(size)
    if s < 1:
        raise ValueError(f"patch size must be >= 1, got {s}")
    H, W = mask.shape
    if s > H or s > W:
        return None
    cutoff = int(g * (s * s))

    table = integral_image(mask)
    total = int(table[H, W])
    # Hamming distance to each filled window via four-corner sums:
    # d = s^2 + total - 2 * ones_inside.
    inside = table[s:, s:] - table[: H - s + 1, s:]
    inside -= table[s:, : W - s + 1]
    inside += table[: H - s + 1, : W - s + 1]
    inside *= -2
    inside += s * s + total
    accept = inside <= cutoff

    # Second summed-area table, over the acceptance matrix.  It is embedded
    # in a full-canvas plane of zeros so the running sums saturate past the
    # last candidate row/col and the four-corner cover counts below need no
    # upper clipping.
    acc = np.zeros((H + 1, W + 1), dtype=np.int64)
    acc[1 : H - s + 2, 1 : W - s + 2] = accept
    np.cumsum(acc, axis=0, out=acc)
    np.cumsum(acc, axis=1, out=acc)

    # Pixel (i, j) is covered by accepted windows with top-left corner in
    # rows [i-s+1, i] and cols [j-s+1, j]; count them with four corners.
    lo_r = np.maximum(np.arange(H) - s + 1, 0)
    lo_c = np.maximum(np.arange(W) - s + 1, 0)
    rows = acc[1:] - acc[lo_r]
    cover = rows[:, 1:] - rows[:, lo_c]

    return CandidateField(
        size=s, accept=accept.astype(np.uint8), cover_count=cover
    )


def complete_single_size(observed, size, gamma) -> np.ndarray:
    """Minimal mask covering every acceptable placement of one patch size.

    Parameters
    ----------
    observed : array-like
        H×W binary observation.
    size : int
        Candidate patch side length s.
    gamma : float or Fraction
        Relative Hamming threshold in [0, 1); a window is accepted when its
        distance to the observation is at most gamma * s**2.

    Returns
    -------
    ndarray
        H×W uint8 mask: 1 exactly on pixels inside at least one accepted
        window.  A size larger than the image yields the all-zero mask.
    """
    fieldval = candidate_field(observed, size, gamma)
    if fieldval is None:
        return np.zeros(as_mask(observed).shape, dtype=np.uint8)
    return (fieldval.cover_count >= 1).astype(np.uint8)


def _multi_size_detail(mask, sizes, gamma):
    """OR of single-size completions plus per-size bookkeeping."""
    out = np.zeros(mask.shape, dtype=np.uint8)
    accepted = {}
    skipped = []
    for s in sizes:
        fieldval = candidate_field(mask, s, gamma)
        if fieldval is None:
            accepted[s] = 0
            skipped.append(s)
            continue
        accepted[s] = int(fieldval.accept.sum(dtype=np.int64))
        out |= fieldval.cover_count >= 1
    return out, accepted, tuple(skipped)


def complete_multi_size(observed, sizes, gamma) -> np.ndarray:
    """Union of :func:`complete_single_size` over a set of patch sizes."""
    mask = as_mask(observed)
    _exact_gamma(gamma)
    out, _, _ = _multi_size_detail(mask, normalize_sizes(sizes), gamma)
    return out


def complete_fixed_gamma(observed, sizes, gamma):
    """Multi-size completion at a single fixed threshold, with a report.

    Same output mask as :func:`complete_multi_size`; the report mirrors the
    one produced by :func:`gamma_search` with ``iterations_run=1``.

    Returns
    -------
    (ndarray, CompletionReport)
    """
    mask = as_mask(observed)
    out, accepted, skipped = _multi_size_detail(mask, normalize_sizes(sizes), gamma)
    count = popcount(out)
    report = CompletionReport(
        attack_found=count > 0,
        gamma_used=float(gamma) if count > 0 else None,
        iterations_run=1,
        per_size_accepted=accepted,
        skipped_sizes=skipped,
        output_popcount=count,
    )
    return out, report


def gamma_search(observed, sizes, schedule=GammaSchedule()):
    """Run the threshold schedule until the completion is nonempty.

    Evaluates the multi-size completion at gamma_1 < gamma_2 < ... and
    returns the first nonzero mask together with a report.  If every step
    comes back empty, the observation is taken to contain no patch at all
    and the empty mask is returned with ``attack_found=False``.

    Returns
    -------
    (ndarray, CompletionReport)
    """
    mask = as_mask(observed)
    sizes = normalize_sizes(sizes)
    H, W = mask.shape
    skipped = tuple(s for s in sizes if s > H or s > W)

    if not mask.any():
        # No observed pixel can ever be explained at gamma < 1: each window
        # would have to differ in all s^2 positions.  Skip the schedule.
        report = CompletionReport(
            attack_found=False,
            gamma_used=None,
            iterations_run=schedule.t_max,
            per_size_accepted={s: 0 for s in sizes},
            skipped_sizes=skipped,
            output_popcount=0,
        )
        return np.zeros((H, W), dtype=np.uint8), report

    accepted = {s: 0 for s in sizes}
    for t in range(1, schedule.t_max + 1):
        g = schedule.gamma(t)
        out, accepted, skipped = _multi_size_detail(mask, sizes, g)
        if out.any():
            report = CompletionReport(
                attack_found=True,
                gamma_used=float(g),
                iterations_run=t,
                per_size_accepted=accepted,
                skipped_sizes=skipped,
                output_popcount=popcount(out),
            )
            return out, report

    report = CompletionReport(
        attack_found=False,
        gamma_used=None,
        iterations_run=schedule.t_max,
        per_size_accepted=accepted,
        skipped_sizes=skipped,
        output_popcount=0,
    )
    return np.zeros((H, W), dtype=np.uint8), report


def final_mask(observed, completed) -> np.ndarray:
    """Union of the observation and its completion.

    The completion can be empty when the observation matches no candidate
    placement (e.g. a non-square artifact); keeping the observed pixels in
    the final mask means those detections are still acted upon.
    """
    return union(observed, completed)


def apply_mask(base, mask) -> np.ndarray:
    """Zero out the pixels of ``base`` selected by ``mask`` (a AND NOT m)."""
    a = as_mask(base)
    m = as_mask(mask)
    if a.shape != m.shape:
        raise ValueError(f"mask dimensions differ: {a.shape} vs {m.shape}")
    return a & (1 - m)
