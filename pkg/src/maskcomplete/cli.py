"""Command-line front end.

Subcommands::

    complete   complete an observed mask (threshold schedule or fixed gamma)
    oracle     brute-force completion, optionally diffed against another mask
    gen        draw a parametric patch shape
    corrupt    damage a ground-truth mask with a seeded corruption model
    trial      randomized coverage-guarantee trials
    bench      scaling benchmark (engine vs. oracle)

Masks travel as PBM files (P1 plain or P4 raw); bit 1 means "patch pixel"
and renders black.  Exit codes: 0 success, 1 verification mismatch, 2 usage
error, 3 I/O or file-format error.
"""

import argparse
import json
import sys
import time

import numpy as np

from .bench import run_benchmark
from .completion import (
    GammaSchedule,
    complete_fixed_gamma,
    distance_cutoff,
    final_mask,
    gamma_search,
    normalize_sizes,
)
from .corruption import (
    DEFAULT_SEED,
    CorruptionKind,
    CorruptionModel,
    corrupt_outcome,
    guarantee_trial,
)
from .masks import popcount
from .oracle import oracle_complete_multi
from .pbm import PBMFormatError, atomic_write_text, read_pbm, write_pbm
from .shapes import ShapeKind, generate_shape_mask

SCHEMA_VERSION = 1
MASK_CONVENTION = "1 = patch pixel (PBM black)"

__all__ = ["build_parser", "main", "entrypoint"]


def _parse_sizes(text):
    try:
        parts = [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise ValueError(f"sizes must be comma-separated integers, got {text!r}")
    if not parts:
        raise ValueError("at least one patch size is required")
    return normalize_sizes(parts)


def _parse_canvas(text):
    raw = text.lower().replace("x", ",").split(",")
    try:
        dims = [int(p) for p in raw if p.strip()]
    except ValueError:
        dims = []
    if len(dims) == 1:
        dims = [dims[0], dims[0]]
    if len(dims) != 2 or dims[0] < 1 or dims[1] < 1:
        raise ValueError(f"canvas must look like HxW or a single size, got {text!r}")
    return dims[0], dims[1]


def _parse_anchor(text):
    if text is None:
        return None
    try:
        row, col = (int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"anchor must look like ROW,COL, got {text!r}")
    return row, col


def _write_report(path, doc):
    atomic_write_text(path, json.dumps(doc, indent=2) + "\n")


def _input_descriptor(path, mask):
    return {
        "path": str(path),
        "height": int(mask.shape[0]),
        "width": int(mask.shape[1]),
        "popcount": popcount(mask),
    }


def _report_result(report, output_path):
    return {
        "attack_found": report.attack_found,
        "gamma_used": report.gamma_used,
        "iterations_run": report.iterations_run,
        "per_size_accepted": {str(k): v for k, v in report.per_size_accepted.items()},
        "skipped_sizes": list(report.skipped_sizes),
        "output_popcount": report.output_popcount,
        "output_path": str(output_path),
    }


def _cmd_complete(args):
    start = time.perf_counter()
    observed = read_pbm(args.input)
    sizes = _parse_sizes(args.sizes)

    if args.fixed_gamma is not None:
        completed, report = complete_fixed_gamma(observed, sizes, args.fixed_gamma)
        config = {"sizes": list(sizes), "fixed_gamma": args.fixed_gamma}
    else:
        schedule = GammaSchedule(alpha=args.alpha, beta=args.beta, t_max=args.t_max)
        completed, report = gamma_search(observed, sizes, schedule)
        config = {
            "sizes": list(sizes),
            "alpha": args.alpha,
            "beta": args.beta,
            "t_max": args.t_max,
        }
    config["union_ps"] = args.union_ps
    config["format"] = args.format.upper()

    out = final_mask(observed, completed) if args.union_ps else completed
    write_pbm(out, args.output, fmt=args.format.upper())

    if args.report:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "complete",
            "mask_convention": MASK_CONVENTION,
            "input": _input_descriptor(args.input, observed),
            "config": config,
            "result": _report_result(report, args.output),
            "written_popcount": popcount(out),
            "wall_time_ms": round((time.perf_counter() - start) * 1e3, 3),
        }
        _write_report(args.report, doc)

    if report.attack_found:
        print(
            f"wrote {args.output}: attack found at gamma={report.gamma_used:g} "
            f"(iteration {report.iterations_run}), popcount {popcount(out)}"
        )
    else:
        print(f"wrote {args.output}: no attack found, popcount {popcount(out)}")
    return 0


def _cmd_oracle(args):
    observed = read_pbm(args.input)
    sizes = _parse_sizes(args.sizes)
    out = oracle_complete_multi(observed, sizes, args.gamma)
    if args.output:
        write_pbm(out, args.output, fmt=args.format.upper())
        print(f"wrote {args.output}: popcount {popcount(out)}")
    if args.diff:
        other = read_pbm(args.diff)
        if other.shape != out.shape:
            print(
                f"MISMATCH: {args.diff} is {other.shape[0]}x{other.shape[1]}, "
                f"oracle output is {out.shape[0]}x{out.shape[1]}",
                file=sys.stderr,
            )
            return 1
        differing = int((other != out).sum(dtype=np.int64))
        if differing:
            print(f"MISMATCH: {differing} differing pixels", file=sys.stderr)
            return 1
        print(f"match: {args.diff} equals the oracle completion")
    return 0


def _cmd_gen(args):
    mask = generate_shape_mask(
        ShapeKind(args.kind), args.n, _parse_anchor(args.anchor), _parse_canvas(args.canvas)
    )
    write_pbm(mask, args.output, fmt=args.format.upper())
    print(f"wrote {args.output}: {args.kind} n={args.n}, popcount {popcount(mask)}")
    return 0


def _cmd_corrupt(args):
    observed = read_pbm(args.input)
    model = CorruptionModel(
        kind=CorruptionKind(args.model), budget=args.budget, seed=args.seed
    )
    outcome = corrupt_outcome(observed, model)
    write_pbm(outcome.mask, args.output, fmt=args.format.upper())
    if args.report:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "corrupt",
            "mask_convention": MASK_CONVENTION,
            "input": _input_descriptor(args.input, observed),
            "model": {
                "kind": model.kind.value,
                "budget": model.budget,
                "seed": model.seed,
                "generator": "pcg64",
            },
            "hamming": outcome.hamming,
            "clamped": outcome.clamped,
            "output_path": str(args.output),
            "output_popcount": popcount(outcome.mask),
        }
        _write_report(args.report, doc)
    print(
        f"wrote {args.output}: {args.model} moved {outcome.hamming} pixels"
        + (" (budget clamped)" if outcome.clamped else "")
    )
    return 0


def _cmd_trial(args):
    canvas = _parse_canvas(args.canvas)
    budget = args.budget
    if budget is None:
        budget = distance_cutoff(args.gamma, args.size)
    seeds = np.random.SeedSequence(args.seed).generate_state(
        args.trials, dtype=np.uint64
    )
    records = [
        guarantee_trial(
            args.size,
            canvas,
            args.gamma,
            CorruptionModel(CorruptionKind(args.model), budget, int(seed)),
        )
        for seed in seeds
    ]
    passed = sum(r.passed for r in records)
    within = [r for r in records if r.within_budget]
    failures_within = [r for r in within if not r.passed]

    if args.report:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "trial",
            "config": {
                "size": args.size,
                "canvas": list(canvas),
                "gamma": args.gamma,
                "model": args.model,
                "budget": budget,
                "trials": args.trials,
                "seed": args.seed,
                "generator": "pcg64",
            },
            "passed": passed,
            "within_budget": len(within),
            "within_budget_failures": [r.seed for r in failures_within],
            "cover_rate": passed / len(records),
        }
        _write_report(args.report, doc)

    print(
        f"{passed}/{len(records)} trials covered the ground truth "
        f"({len(within)} within budget, {len(failures_within)} guarantee violations)"
    )
    return 1 if failures_within else 0


def _cmd_bench(args):
    report = run_benchmark(
        canvases=[int(c) for c in args.canvases.split(",")],
        sizes=[int(s) for s in args.sizes.split(",")],
        repeats=args.reps,
        oracle_repeats=args.oracle_reps,
        include_oracle=not args.no_oracle,
    )
    for canvas, per_size in report["dp_seconds"].items():
        for size, seconds in per_size.items():
            print(f"dp      {canvas:>6}px s={size:>4}  {seconds * 1e3:9.2f} ms")
    for canvas, per_size in report["oracle_seconds"].items():
        for size, seconds in per_size.items():
            print(f"oracle  {canvas:>6}px s={size:>4}  {seconds * 1e3:9.2f} ms")
    for key in ("dp_area_ratio", "dp_size_spread", "oracle_growth"):
        if key in report:
            print(f"{key} = {report[key]:.3f}")
    if args.report:
        _write_report(args.report, report)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maskcomplete",
        description=(
            "Robust completion of binary patch masks: recover the minimal mask "
            "covering every square-patch placement within a relative Hamming "
            "threshold of the observation."
        ),
        epilog=(
            f"Mask files are PBM (P1/P4); {MASK_CONVENTION}. Exit codes: "
            "0 success, 1 verification mismatch, 2 usage error, 3 I/O error."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def _add_format(p):
        p.add_argument(
            "--format",
            choices=["p1", "p4"],
            default="p4",
            help="output PBM flavor (default raw P4)",
        )

    p = sub.add_parser("complete", help="complete an observed mask")
    p.add_argument("input", help="observed mask (PBM)")
    p.add_argument("-o", "--output", required=True, help="completed mask (PBM)")
    p.add_argument("--report", help="write a JSON run report here")
    p.add_argument("--sizes", default="25,50,75,100", help="candidate patch sizes")
    p.add_argument("--alpha", type=float, default=0.9, help="schedule alpha")
    p.add_argument("--beta", type=float, default=0.7, help="schedule beta")
    p.add_argument("--t-max", type=int, default=15, help="schedule iteration cap")
    p.add_argument(
        "--fixed-gamma",
        type=float,
        default=None,
        help="skip the schedule and complete at this single threshold",
    )
    p.add_argument(
        "--union-ps",
        action="store_true",
        help="OR the observed mask into the written output (final-mask rule)",
    )
    _add_format(p)
    p.set_defaults(func=_cmd_complete)

    p = sub.add_parser("oracle", help="brute-force completion / verification")
    p.add_argument("input", help="observed mask (PBM)")
    p.add_argument("--sizes", required=True, help="patch size(s), comma separated")
    p.add_argument("--gamma", type=float, required=True, help="threshold in [0,1)")
    p.add_argument("-o", "--output", help="write the oracle completion here")
    p.add_argument("--diff", help="compare against this mask; exit 1 on mismatch")
    _add_format(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("gen", help="draw a parametric patch shape")
    p.add_argument("--kind", required=True, choices=[k.value for k in ShapeKind])
    p.add_argument("--n", type=int, required=True, help="nominal side length")
    p.add_argument("--canvas", required=True, help="canvas as HxW")
    p.add_argument("--anchor", help="top-left ROW,COL (default: centered)")
    p.add_argument("-o", "--output", required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("corrupt", help="corrupt a ground-truth mask")
    p.add_argument("input", help="ground-truth mask (PBM)")
    p.add_argument(
        "--model", required=True, choices=[k.value for k in CorruptionKind]
    )
    p.add_argument("--budget", type=int, required=True, help="max pixels changed")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--report", help="write a JSON report here")
    _add_format(p)
    p.set_defaults(func=_cmd_corrupt)

    p = sub.add_parser("trial", help="randomized coverage-guarantee trials")
    p.add_argument("--size", type=int, required=True, help="patch side length")
    p.add_argument("--canvas", default="64x64", help="canvas as HxW")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument(
        "--model", required=True, choices=[k.value for k in CorruptionKind]
    )
    p.add_argument(
        "--budget",
        type=int,
        default=None,
        help="corruption budget (default floor(gamma * size^2))",
    )
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--report", help="write a JSON report here")
    p.set_defaults(func=_cmd_trial)

    p = sub.add_parser("bench", help="scaling benchmark")
    p.add_argument("--canvases", default="512,1024", help="square canvas sizes")
    p.add_argument("--sizes", default="25,50,100", help="patch sizes")
    p.add_argument("--reps", type=int, default=3, help="engine repetitions")
    p.add_argument("--oracle-reps", type=int, default=1, help="oracle repetitions")
    p.add_argument("--no-oracle", action="store_true", help="skip the oracle path")
    p.add_argument("--report", help="write the JSON report here")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PBMFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
