"""Acceptance suite: one test per release criterion, at stated tolerances.

Each test prints a PASS/FAIL line (run with -s to see them live). The two
long-running criteria share one protocol execution at the reference
setting (population 30, 500 iterations, 30 shared-seed runs, base seed 0).

Known-failing criteria (kept at their stated thresholds on purpose; the
test docstrings carry the measured numbers): the desk-scale table
reproduction fails its F8 and F21-F23 clauses, and the median-ordering
criterion fails on F5. Both failures trace to the leader-followers and
triangular-hunting update rules, whose fixed points sit at the
coordinate origin.
"""

import math
import sys

import numpy as np
import pytest

from whaleopt import benchmarks, harness, nawoa
from whaleopt.core import Objective, SearchSpace, rng_stream
from whaleopt.extobj import ExternalObjectiveDescriptor, external_objective, spawn_evaluator
from whaleopt.initialization import init_good_nodes, init_random, min_pairwise_distance
from whaleopt.nawoa import spiral_step_size
from whaleopt.woa import sigmoid_factor

BASE_SEED = 0
RUNS = 30
POP = 30
ITERS = 500
WORKERS = 2

ORDERING_FUNCTIONS = ["F1", "F2", "F3", "F4", "F5", "F6", "F7", "F12", "F13"]
TABLE_ONLY_FUNCTIONS = ["F8", "F9", "F10", "F11", "F21", "F22", "F23"]


def report(name: str, ok: bool, detail: str = "") -> bool:
    tag = "PASS" if ok else "FAIL"
    print(f"[{tag}] {name}" + (f": {detail}" if detail else ""))
    return ok


@pytest.fixture(scope="module")
def ordering_result():
    return harness.run_protocol(
        ["woa", "nawoa"], ORDERING_FUNCTIONS, RUNS, POP, ITERS, BASE_SEED, workers=WORKERS
    )


@pytest.fixture(scope="module")
def table_result():
    return harness.run_protocol(
        ["nawoa"], TABLE_ONLY_FUNCTIONS, RUNS, POP, ITERS, BASE_SEED, workers=WORKERS
    )


def finals(result, algorithm, fid):
    return np.array(
        [r.final_fitness for r in result.reports if r.algorithm == algorithm and r.objective == fid]
    )


def test_equation_unit_suite():
    T = 500
    checks = [
        sigmoid_factor(T // 2, T) == 1.0,
        1.99999 <= sigmoid_factor(0, T) < 2.0,
        0.0 < sigmoid_factor(T, T) <= 1e-5,
        abs(spiral_step_size(0, T, 1.0) - math.exp(-1.0)) <= 1e-12,
        abs(spiral_step_size(T, T, 1.0) - math.e) <= 1e-12,
    ]
    ok = all(checks)
    report("equation unit suite", ok, f"sub-checks {checks}")
    assert ok


def test_benchmark_fidelity():
    worst = 0.0
    failures = []
    for entry in benchmarks.registry():
        if entry.optimum is None:
            continue  # F7 is stochastic: no stable value at its optimizer
        tolerance = 1e-1 if entry.fid == "F8" else 1e-4
        gap = abs(entry.evaluate(entry.optimum) - entry.best_value)
        worst = max(worst, gap)
        if gap > tolerance:
            failures.append((entry.fid, gap))
    ok = not failures
    report("benchmark fidelity", ok, f"worst gap {worst:.3e}, failures {failures}")
    assert ok


def test_table_reproduction_desk_scale(ordering_result, table_result):
    """Reference-table reproduction at desk scale.

    KNOWN PARTIAL FAILURE: the F8 and F21-F23 clauses do not hold for
    this rule set (measured means about -5.6e3 and -5.6/-6.2/-4.3 with
    run-to-run spreads of order 1e2 and 1, against required -1.24e4 and
    -10.15/-10.40/-10.54 with spread <= 1e-6). The update rules contract
    toward the coordinate origin, so optima far from the origin are only
    found coordinate-by-coordinate while exploration lasts. Greedy
    acceptance, branch-selective greedy, time-switched acceptance, and
    asynchronous updates were all measured and none closes the gap.
    """
    clauses = []

    def clause(name, ok, detail):
        clauses.append(ok)
        print(f"    {'ok  ' if ok else 'FAIL'} {name}: {detail}")

    for fid in ("F1", "F2", "F3", "F4"):
        mean = finals(ordering_result, "nawoa", fid).mean()
        clause(f"{fid} mean <= 1e-150", mean <= 1e-150, f"mean {mean:.3e}")
    for fid in ("F9", "F11"):
        mean = finals(table_result, "nawoa", fid).mean()
        clause(f"{fid} mean <= 1e-12", mean <= 1e-12, f"mean {mean:.3e}")
    mean10 = finals(table_result, "nawoa", "F10").mean()
    clause("F10 mean <= 5e-16", mean10 <= 5e-16, f"mean {mean10:.6e}")

    mean8 = finals(table_result, "nawoa", "F8").mean()
    clause(
        "F8 mean within 1% of -12569.5",
        abs(mean8 - (-12569.5)) <= 0.01 * 12569.5,
        f"mean {mean8:.6e}",
    )
    for fid, target in (("F21", -10.153), ("F22", -10.403), ("F23", -10.536)):
        values = finals(table_result, "nawoa", fid)
        mean, std = values.mean(), values.std(ddof=1)
        clause(
            f"{fid} mean within 0.5 of {target} and std <= 1e-6",
            abs(mean - target) <= 0.5 and std <= 1e-6,
            f"mean {mean:.6e} std {std:.3e}",
        )

    ok = all(clauses)
    report("table reproduction desk scale", ok, f"{sum(clauses)}/{len(clauses)} clauses hold")
    assert ok


def test_comparative_ordering(ordering_result):
    """Median ordering against the baseline on F1-F7, F12, F13.

    KNOWN PARTIAL FAILURE: F5 (Rosenbrock) violates the ordering
    (adaptive median about 28.7 vs baseline 27.1). The exploration
    phase collapses population diversity (the leader-followers rule maps
    every individual in its branch to one shared point), which stalls
    valley descent; all alternative acceptance policies measured trade
    this failure for one on F6. Remaining eight functions order
    correctly with strict wins.
    """
    wins = ties = 0
    details = []
    ok_each = []
    for fid in ORDERING_FUNCTIONS:
        nawoa_median = float(np.median(finals(ordering_result, "nawoa", fid)))
        woa_median = float(np.median(finals(ordering_result, "woa", fid)))
        if nawoa_median < woa_median:
            wins += 1
            verdict = "win"
        elif nawoa_median == woa_median:
            ties += 1
            verdict = "tie"
        else:
            verdict = "LOSS"
        ok_each.append(nawoa_median <= woa_median)
        details.append(f"{fid} {nawoa_median:.3e} vs {woa_median:.3e} ({verdict})")
        print(f"    {details[-1]}")
    ok = all(ok_each) and ties <= 1
    report("comparative ordering", ok, f"{wins} wins, {ties} ties of {len(ORDERING_FUNCTIONS)}")
    assert ok


def test_initialization_uniformity():
    space = SearchSpace(np.zeros(2), np.ones(2))
    good = min_pairwise_distance(
        np.array([ind.position for ind in init_good_nodes(200, space)])
    )
    rng = rng_stream(BASE_SEED)
    random_means = [
        min_pairwise_distance(np.array([ind.position for ind in init_random(200, space, rng)]))
        for _ in range(30)
    ]
    ok = good > float(np.mean(random_means))
    report(
        "initialization uniformity",
        ok,
        f"good-nodes min distance {good:.5f} vs random mean {np.mean(random_means):.5f}",
    )
    assert ok


def test_determinism_replay(tmp_path):
    first = tmp_path / "first"
    second = tmp_path / "second"
    manifest = harness.run_and_emit(
        ["woa", "nawoa"], ["F1", "F9", "F16"], 3, 10, 60, BASE_SEED, first, workers=WORKERS
    )
    harness.replay_manifest(manifest, second)
    names = ["aggregate.csv", "manifest.json"] + [
        f"trace_{algorithm}_{fid}.csv"
        for algorithm in ("woa", "nawoa")
        for fid in ("F1", "F9", "F16")
    ]
    mismatches = [n for n in names if (first / n).read_bytes() != (second / n).read_bytes()]
    ok = not mismatches
    report("determinism replay", ok, f"{len(names)} files compared, mismatches {mismatches}")
    assert ok


def test_protocol_oracle_equivalence():
    space = SearchSpace.cube(2, -100.0, 100.0)
    params = nawoa.NawoaParams(n_pop=10, n_iter=50)

    in_process = nawoa.optimize(
        Objective(space, lambda x: x[0] * x[0] + x[1] * x[1], name="sphere"),
        params,
        seed=BASE_SEED,
    )
    descriptor = ExternalObjectiveDescriptor(
        command=[sys.executable, "-m", "whaleopt.sphere_eval"], space=space, timeout=30.0
    )
    with spawn_evaluator(descriptor) as session:
        external = nawoa.optimize(
            external_objective(session, name="sphere"), params, seed=BASE_SEED
        )

    gap = abs(in_process.final_fitness - external.final_fitness)
    converged = external.final_fitness <= 1e-3
    ok = gap <= 1e-12 and converged
    report(
        "protocol oracle equivalence",
        ok,
        f"final gap {gap:.3e}, external final {external.final_fitness:.3e}",
    )
    assert ok
