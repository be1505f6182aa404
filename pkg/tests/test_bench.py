"""Benchmark harness structure checks.

Timing *values* are asserted in the acceptance tests with realistic
canvases; here we only verify report shape, on tiny inputs.
"""

import pytest

from maskcomplete.bench import BENCH_GAMMA, bench_fixture, run_benchmark, time_callable


def test_fixture_is_centered_square():
    mask = bench_fixture(32, 10)
    assert mask.shape == (32, 32)
    assert int(mask.sum()) == 100
    assert mask[11:21, 11:21].all()


def test_report_structure():
    report = run_benchmark(canvases=(32, 48), sizes=(4, 8), repeats=1)
    assert report["schema_version"] == 1
    assert report["config"]["gamma"] == BENCH_GAMMA
    assert set(report["dp_seconds"]) == {"32", "48"}
    assert set(report["dp_seconds"]["32"]) == {"4", "8"}
    assert set(report["oracle_seconds"]) == {"32"}  # smallest canvas only
    assert "dp_area_ratio" in report
    assert "dp_size_spread" in report
    assert "oracle_growth" in report
    for per_size in report["dp_seconds"].values():
        for seconds in per_size.values():
            assert seconds > 0


def test_single_canvas_has_no_area_ratio():
    report = run_benchmark(canvases=(32,), sizes=(4,), repeats=1, include_oracle=False)
    assert "dp_area_ratio" not in report
    assert "dp_size_spread" not in report
    assert "oracle_growth" not in report
    assert report["oracle_seconds"] == {}


def test_oversized_patch_skipped():
    report = run_benchmark(canvases=(16,), sizes=(8, 64), repeats=1)
    assert set(report["dp_seconds"]["16"]) == {"8"}
    assert set(report["oracle_seconds"]["16"]) == {"8"}


def test_bad_repeat_counts():
    with pytest.raises(ValueError):
        run_benchmark(canvases=(16,), sizes=(4,), repeats=0)
    with pytest.raises(ValueError):
        run_benchmark(canvases=(16,), sizes=(4,), oracle_repeats=0)


def test_time_callable_counts_calls():
    calls = []
    time_callable(lambda: calls.append(1), repeats=3)
    assert len(calls) == 4  # one warmup + three timed runs
    calls.clear()
    time_callable(lambda: calls.append(1), repeats=2, warmup=False)
    assert len(calls) == 2
