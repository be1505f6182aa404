"""Scaling benchmark for the completion engine and the brute-force oracle.

The engine's runtime should track image area and stay flat across patch
sizes; the oracle's should grow with s**2.  Medians over a few repetitions
keep the numbers stable enough to assert those ratios.
"""

import statistics
import time

import numpy as np

from .completion import complete_single_size
from .oracle import oracle_complete_single

__all__ = ["BENCH_GAMMA", "bench_fixture", "time_callable", "run_benchmark"]

# Threshold used for all timed runs.  Any value works for timing purposes;
# a moderate one keeps the accepted-candidate plane non-trivial.
BENCH_GAMMA = 0.25


def bench_fixture(canvas: int, size: int) -> np.ndarray:
    """Canvas-sized mask holding one centered patch of the given size."""
    mask = np.zeros((canvas, canvas), dtype=np.uint8)
    lo = (canvas - size) // 2
    mask[lo : lo + size, lo : lo + size] = 1
    return mask


def time_callable(fn, repeats: int, warmup: bool = True) -> float:
    """Median wall-time of ``fn()`` in seconds over ``repeats`` runs."""
    if warmup:
        fn()
    samples = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def run_benchmark(
    canvases=(512, 1024),
    sizes=(25, 50, 100),
    repeats=3,
    oracle_repeats=1,
    include_oracle=True,
) -> dict:
    """Time the completion engine (and optionally the oracle) per config.

    Returns a JSON-ready dict with per-configuration median seconds plus
    the derived ratios: area scaling of the engine between the smallest
    and largest canvas, the engine's spread across patch sizes, and the
    oracle's growth from the smallest to the largest patch size.  The
    oracle is timed on the smallest canvas only (it is slow by design) and
    without warmup, since the interpreted path has no caches to prime.
    """
    canvases = sorted(int(c) for c in canvases)
    sizes = sorted(int(s) for s in sizes)
    if repeats < 1 or oracle_repeats < 1:
        raise ValueError("repetition counts must be >= 1")

    dp_seconds = {}
    for canvas in canvases:
        per_size = {}
        for size in sizes:
            if size > canvas:
                continue
            mask = bench_fixture(canvas, size)
            per_size[str(size)] = time_callable(
                lambda: complete_single_size(mask, size, BENCH_GAMMA), repeats
            )
        dp_seconds[str(canvas)] = per_size

    oracle_seconds = {}
    if include_oracle:
        canvas = canvases[0]
        per_size = {}
        for size in sizes:
            if size > canvas:
                continue
            mask = bench_fixture(canvas, size)
            per_size[str(size)] = time_callable(
                lambda: oracle_complete_single(mask, size, BENCH_GAMMA),
                oracle_repeats,
                warmup=False,
            )
        oracle_seconds[str(canvas)] = per_size

    report = {
        "schema_version": 1,
        "config": {
            "canvases": list(canvases),
            "sizes": list(sizes),
            "repeats": repeats,
            "oracle_repeats": oracle_repeats,
            "gamma": BENCH_GAMMA,
            "include_oracle": bool(include_oracle),
        },
        "dp_seconds": dp_seconds,
        "oracle_seconds": oracle_seconds,
    }

    if len(canvases) >= 2:
        small = dp_seconds[str(canvases[0])]
        large = dp_seconds[str(canvases[-1])]
        shared = [s for s in small if s in large]
        if shared:
            report["dp_area_ratio"] = statistics.median(
                large[s] / small[s] for s in shared
            )
    first = dp_seconds[str(canvases[0])]
    if len(first) >= 2:
        values = list(first.values())
        report["dp_size_spread"] = max(values) / min(values) - 1.0
    if include_oracle:
        per_size = oracle_seconds[str(canvases[0])]
        if len(per_size) >= 2:
            keys = sorted(per_size, key=int)
            report["oracle_growth"] = per_size[keys[-1]] / per_size[keys[0]]
    return report
