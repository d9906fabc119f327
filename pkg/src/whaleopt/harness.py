"""Repeated-trial experiment protocol: shared-seed runs, mean/std tables,
convergence traces, and machine-readable emission with exact replay.

Trial i of every (algorithm, benchmark) pair uses seed = base_seed + i, so
competing algorithms see identical seed sequences. All emitted numbers are
serialized with round-trip-exact float formatting, making a replay from
the manifest byte-identical.
"""

from __future__ import annotations

import csv
import json
import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import benchmarks, nawoa, woa
from .core import Objective, TrialAbortedError, TrialReport, rng_stream

# dedicated entropy key appended to the trial seed for F7's noise stream,
# keeping it independent of the optimizer's own draws
NOISE_STREAM_KEY = 0xF7

ALGORITHMS = ("woa", "nawoa")


def aggregate(final_bests) -> tuple[float, float]:
    """Mean and sample (n-1) standard deviation; std is 0 for a single run."""
    values = [float(v) for v in final_bests]
    if not values:
        raise ValueError("cannot aggregate an empty result set")
    ave = sum(values) / len(values)
    if len(values) == 1:
        return ave, 0.0
    var = sum((v - ave) ** 2 for v in values) / (len(values) - 1)
    return ave, math.sqrt(var)


@dataclass
class AggregateRow:
    """One line of the results table: per (algorithm, benchmark) statistics."""

    algorithm: str
    benchmark: str
    ave: float
    std: float
    runs: int


@dataclass
class ProtocolResult:
    rows: list[AggregateRow]
    reports: list[TrialReport]
    failures: int


def make_objective(fid: str, seed: int) -> Objective:
    """Benchmark objective for one trial; F7 gets its split noise stream."""
    entry = benchmarks.get(fid)
    noise = rng_stream([seed, NOISE_STREAM_KEY]) if entry.noisy else None
    return entry.objective(noise)


def run_single_trial(algorithm: str, fid: str, seed: int, n_pop: int, n_iter: int) -> TrialReport:
    """One (algorithm, benchmark, seed) trial on an in-process benchmark."""
    objective = make_objective(fid, seed)
    if algorithm == "nawoa":
        params = nawoa.NawoaParams(n_pop=n_pop, n_iter=n_iter)
        return nawoa.optimize(objective, params, seed=seed, init_mode="good-nodes")
    if algorithm == "woa":
        params = woa.WoaParams(n_pop=n_pop, n_iter=n_iter)
        return woa.optimize(objective, params, seed=seed, init_mode="random")
    raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")


def _trial_task(task):
    algorithm, fid, seed, n_pop, n_iter = task
    try:
        return task, run_single_trial(algorithm, fid, seed, n_pop, n_iter), None
    except TrialAbortedError as exc:
        return task, exc.report, str(exc)


def run_protocol(
    algorithms,
    benchmark_ids,
    runs: int,
    n_pop: int,
    n_iter: int,
    base_seed: int,
    workers: int = 1,
) -> ProtocolResult:
    """Run `runs` shared-seed trials for every (algorithm, benchmark) pair.

    Failed trials are excluded from the aggregates and counted; output
    order is (algorithm, benchmark, run) regardless of worker scheduling.
    """
    if runs < 1:
        raise ValueError("runs must be >= 1")
    algorithms = list(algorithms)
    benchmark_ids = [benchmarks.get(fid).fid for fid in benchmark_ids]
    seeds = [base_seed + i for i in range(runs)]

    tasks = [
        (algorithm, fid, seed, n_pop, n_iter)
        for algorithm in algorithms
        for fid in benchmark_ids
        for seed in seeds
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_trial_task, tasks, chunksize=1))
    else:
        outcomes = [_trial_task(task) for task in tasks]

    by_task = {task: (report, error) for task, report, error in outcomes}
    rows: list[AggregateRow] = []
    reports: list[TrialReport] = []
    failures = 0
    for algorithm in algorithms:
        for fid in benchmark_ids:
            finals = []
            for seed in seeds:
                report, error = by_task[(algorithm, fid, seed, n_pop, n_iter)]
                reports.append(report)
                if error is None:
                    finals.append(report.final_fitness)
                else:
                    failures += 1
            if not finals:
                warnings.warn(f"all {runs} trials failed for {algorithm} on {fid}")
                continue
            ave, std = aggregate(finals)
            rows.append(AggregateRow(algorithm, fid, ave, std, len(finals)))
    if failures:
        warnings.warn(f"{failures} trial(s) failed; aggregates cover completed trials only")
    return ProtocolResult(rows=rows, reports=reports, failures=failures)


def _fmt(value: float) -> str:
    """Round-trip-exact decimal rendering (17 significant digits via repr)."""
    return repr(float(value))


def emit_results(result: ProtocolResult, out_dir, config: dict) -> Path:
    """Write aggregate CSV, per-pair trace CSVs, and the replay manifest.

    Returns the manifest path. Timing data is deliberately omitted so the
    emitted files are a pure function of the configuration.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    aggregate_path = out / "aggregate.csv"
    with aggregate_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["algorithm", "benchmark", "ave", "std", "runs"])
        for row in result.rows:
            writer.writerow([row.algorithm, row.benchmark, _fmt(row.ave), _fmt(row.std), row.runs])

    grouped: dict[tuple[str, str], list[TrialReport]] = {}
    for report in result.reports:
        grouped.setdefault((report.algorithm, report.objective), []).append(report)

    trace_files = {}
    for (algorithm, fid), group in grouped.items():
        group = sorted(group, key=lambda r: r.seed)
        name = f"trace_{algorithm}_{fid}.csv"
        trace_files[f"{algorithm}:{fid}"] = name
        length = max(len(r.trace) for r in group)
        with (out / name).open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["iteration"] + [f"run_{i}" for i in range(len(group))])
            for it in range(length):
                row = [it]
                for r in group:
                    row.append(_fmt(r.trace[it]) if it < len(r.trace) else "")
                writer.writerow(row)

    manifest = {
        "version": 1,
        "config": dict(config),
        "seeds": [base for base in sorted({r.seed for r in result.reports})],
        "std_estimator": "sample (n-1 denominator); runs=1 rows use std=0 and are degenerate",
        "noise_stream_key": NOISE_STREAM_KEY,
        "failures": result.failures,
        "files": {"aggregate": aggregate_path.name, "traces": trace_files},
    }
    manifest_path = out / "manifest.json"
    manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True))
    return manifest_path


def run_and_emit(
    algorithms,
    benchmark_ids,
    runs: int,
    n_pop: int,
    n_iter: int,
    base_seed: int,
    out_dir,
    workers: int = 1,
) -> Path:
    """run_protocol + emit_results with the effective config recorded."""
    config = {
        "algorithms": list(algorithms),
        "benchmarks": [benchmarks.get(fid).fid for fid in benchmark_ids],
        "runs": runs,
        "pop": n_pop,
        "iters": n_iter,
        "seed": base_seed,
        "workers": workers,
    }
    result = run_protocol(algorithms, benchmark_ids, runs, n_pop, n_iter, base_seed, workers)
    return emit_results(result, out_dir, config)


def replay_manifest(manifest_path, out_dir) -> Path:
    """Re-run the configuration recorded in a manifest; emits fresh files."""
    manifest = json.loads(Path(manifest_path).read_text())
    cfg = manifest["config"]
    return run_and_emit(
        cfg["algorithms"],
        cfg["benchmarks"],
        cfg["runs"],
        cfg["pop"],
        cfg["iters"],
        cfg["seed"],
        out_dir,
        workers=cfg.get("workers", 1),
    )
