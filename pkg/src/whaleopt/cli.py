"""Command-line interface: benchmark protocol runs, single optimizations,
and external-objective tuning.

Exit codes: 0 success, 1 runtime failure, 2 usage error. All randomness
derives from --seed (trial i uses seed + i), and every output directory
contains a manifest that replays the run exactly.
"""

from __future__ import annotations

import argparse
import csv
import json
import shlex
import sys
from pathlib import Path

import numpy as np

from . import benchmarks, extobj, harness, nawoa, woa
from .core import SearchSpace, TrialReport


class UsageError(Exception):
    """Invalid flags or config content (exit code 2)."""


def parse_function_ids(spec: str) -> list[str]:
    """Expand "F1-F23" ranges and comma lists into explicit ids."""
    ids: list[str] = []
    for token in spec.split(","):
        token = token.strip().upper()
        if not token:
            continue
        if "-" in token:
            lo_s, hi_s = token.split("-", 1)
            try:
                lo = int(lo_s.lstrip("F"))
                hi = int(hi_s.lstrip("F"))
            except ValueError:
                raise UsageError(f"bad function range {token!r}") from None
            if lo > hi:
                raise UsageError(f"empty function range {token!r}")
            ids.extend(f"F{i}" for i in range(lo, hi + 1))
        else:
            ids.append(token)
    if not ids:
        raise UsageError("no functions selected")
    for fid in ids:
        try:
            benchmarks.get(fid)
        except KeyError as exc:
            raise UsageError(str(exc)) from None
    return ids


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"config {path} is not valid JSON: {exc}") from None


def _merge(config: dict, args: argparse.Namespace, key: str, default=None):
    """Flag value if given, else config value, else default."""
    flag = getattr(args, key, None)
    if flag is not None:
        return flag
    return config.get(key, default)


# ---------------------------------------------------------------- bench


def cmd_bench(args: argparse.Namespace) -> int:
    if args.replay is not None:
        if args.out is None:
            raise UsageError("--replay needs --out for the fresh results")
        harness.replay_manifest(args.replay, args.out)
        print(f"replayed {args.replay} into {args.out}")
        return 0

    config = _load_config(args.config)
    algorithms = _merge(config, args, "algorithms", "woa,nawoa")
    if isinstance(algorithms, str):
        algorithms = [a.strip().lower() for a in algorithms.split(",") if a.strip()]
    for algorithm in algorithms:
        if algorithm not in harness.ALGORITHMS:
            raise UsageError(f"unknown algorithm {algorithm!r}; expected {harness.ALGORITHMS}")
    functions = _merge(config, args, "functions", "F1-F23")
    if isinstance(functions, str):
        functions = parse_function_ids(functions)
    runs = int(_merge(config, args, "runs", 30))
    n_pop = int(_merge(config, args, "pop", 30))
    n_iter = int(_merge(config, args, "iters", 500))
    seed = int(_merge(config, args, "seed", 0))
    workers = int(_merge(config, args, "workers", 1))
    out = _merge(config, args, "out")
    if out is None:
        raise UsageError("an output directory is required (--out or config key 'out')")
    if runs < 1:
        raise UsageError("--runs must be >= 1")

    manifest = harness.run_and_emit(algorithms, functions, runs, n_pop, n_iter, seed, out, workers)
    print(f"wrote {manifest.parent / 'aggregate.csv'} ({len(algorithms) * len(functions)} rows)")
    return 0


# ------------------------------------------------------------- optimize


def _write_single_trial(report: TrialReport, out_dir: Path, config: dict) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    with (out_dir / "trace.csv").open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["iteration", "best_fitness"])
        for i, value in enumerate(report.trace):
            writer.writerow([i, repr(float(value))])
    best = {
        "algorithm": report.algorithm,
        "objective": report.objective,
        "seed": report.seed,
        "best_fitness": report.final_fitness,
        "best_position": [float(v) for v in report.final_best.position],
        "evaluations": report.evaluations,
    }
    (out_dir / "best.json").write_text(json.dumps(best, indent=2))
    (out_dir / "manifest.json").write_text(
        json.dumps({"version": 1, "config": config}, indent=2, sort_keys=True)
    )


def cmd_optimize(args: argparse.Namespace) -> int:
    config = _load_config(args.config)
    algorithm = str(_merge(config, args, "algorithm", "nawoa")).lower()
    if algorithm not in harness.ALGORITHMS:
        raise UsageError(f"unknown algorithm {algorithm!r}; expected {harness.ALGORITHMS}")
    function = _merge(config, args, "function")
    if function is None:
        raise UsageError("a benchmark function is required (--function)")
    (fid,) = parse_function_ids(str(function))
    n_pop = int(_merge(config, args, "pop", 30))
    n_iter = int(_merge(config, args, "iters", 500))
    seed = int(_merge(config, args, "seed", 0))

    report = harness.run_single_trial(algorithm, fid, seed, n_pop, n_iter)
    print(f"algorithm: {report.algorithm}")
    print(f"function: {report.objective}")
    print(f"seed: {report.seed}")
    print(f"best fitness: {report.final_fitness!r}")
    print(f"best position: {[float(v) for v in report.final_best.position]}")

    out = _merge(config, args, "out")
    if out is not None:
        effective = {
            "command": "optimize",
            "algorithm": algorithm,
            "function": fid,
            "pop": n_pop,
            "iters": n_iter,
            "seed": seed,
        }
        _write_single_trial(report, Path(out), effective)
    return 0


# ----------------------------------------------------------------- tune


def cmd_tune(args: argparse.Namespace) -> int:
    config = _load_config(args.config)
    command = _merge(config, args, "command")
    if command is None:
        raise UsageError("an evaluator command is required (--command)")
    if isinstance(command, str):
        command = shlex.split(command)
    lower = _merge(config, args, "lower")
    upper = _merge(config, args, "upper")
    if lower is None or upper is None:
        raise UsageError("the tuning box is required (--lower and --upper)")
    try:
        space = SearchSpace(np.asarray(lower, dtype=float), np.asarray(upper, dtype=float))
    except ValueError as exc:
        raise UsageError(f"bad tuning box: {exc}") from None
    algorithm = str(_merge(config, args, "algorithm", "nawoa")).lower()
    if algorithm not in harness.ALGORITHMS:
        raise UsageError(f"unknown algorithm {algorithm!r}; expected {harness.ALGORITHMS}")
    n_pop = int(_merge(config, args, "pop", 10))
    n_iter = int(_merge(config, args, "iters", 50))
    seed = int(_merge(config, args, "seed", 0))
    timeout = float(_merge(config, args, "timeout", 60.0))
    max_restarts = int(_merge(config, args, "max_restarts", 1))
    out = _merge(config, args, "out")
    if out is None:
        raise UsageError("an output directory is required (--out)")

    descriptor = extobj.ExternalObjectiveDescriptor(
        command=command, space=space, timeout=timeout, max_restarts=max_restarts
    )
    with extobj.spawn_evaluator(descriptor) as session:
        objective = extobj.external_objective(session, name="external")
        if algorithm == "nawoa":
            params = nawoa.NawoaParams(n_pop=n_pop, n_iter=n_iter)
            report = nawoa.optimize(objective, params, seed=seed)
        else:
            params = woa.WoaParams(n_pop=n_pop, n_iter=n_iter)
            report = woa.optimize(objective, params, seed=seed)

    effective = {
        "command": "tune",
        "evaluator": command,
        "lower": [float(v) for v in space.lower],
        "upper": [float(v) for v in space.upper],
        "algorithm": algorithm,
        "pop": n_pop,
        "iters": n_iter,
        "seed": seed,
        "timeout": timeout,
        "max_restarts": max_restarts,
    }
    out_dir = Path(out)
    _write_single_trial(report, out_dir, effective)
    print(f"best fitness: {report.final_fitness!r}")
    print(f"best vector: {[float(v) for v in report.final_best.position]}")
    print(f"wrote {out_dir / 'best.json'}")
    return 0


# ----------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="whaleopt",
        description="Whale optimization algorithms with a benchmark harness and external tuning",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    bench = sub.add_parser("bench", help="run the repeated-trial benchmark protocol")
    bench.add_argument("--algorithms", help="comma list, e.g. woa,nawoa")
    bench.add_argument("--functions", help="e.g. F1-F23 or F1,F9,F16")
    bench.add_argument("--runs", type=int)
    bench.add_argument("--pop", type=int)
    bench.add_argument("--iters", type=int)
    bench.add_argument("--seed", type=int)
    bench.add_argument("--workers", type=int)
    bench.add_argument("--out")
    bench.add_argument("--config", help="JSON config mirroring the flags")
    bench.add_argument("--replay", help="manifest.json to replay exactly")
    bench.set_defaults(func=cmd_bench)

    optimize = sub.add_parser("optimize", help="run one trial on one benchmark")
    optimize.add_argument("--algorithm")
    optimize.add_argument("--function")
    optimize.add_argument("--pop", type=int)
    optimize.add_argument("--iters", type=int)
    optimize.add_argument("--seed", type=int)
    optimize.add_argument("--out")
    optimize.add_argument("--config")
    optimize.set_defaults(func=cmd_optimize)

    tune = sub.add_parser("tune", help="optimize an external evaluator process")
    tune.add_argument("--command", help="evaluator launch command (shell-style string)")
    tune.add_argument("--lower", type=float, nargs="+", help="tuning box lower bounds")
    tune.add_argument("--upper", type=float, nargs="+", help="tuning box upper bounds")
    tune.add_argument("--algorithm")
    tune.add_argument("--pop", type=int)
    tune.add_argument("--iters", type=int)
    tune.add_argument("--seed", type=int)
    tune.add_argument("--timeout", type=float)
    tune.add_argument("--max-restarts", dest="max_restarts", type=int)
    tune.add_argument("--out")
    tune.add_argument("--config")
    tune.set_defaults(func=cmd_tune)

    functions = sub.add_parser("functions", help="print the benchmark registry as JSON")
    functions.set_defaults(func=lambda args: (print(benchmarks.registry_json()), 0)[1])

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyboardInterrupt:
        return 1
    except Exception as exc:  # runtime failures map to exit 1 with a diagnostic
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
