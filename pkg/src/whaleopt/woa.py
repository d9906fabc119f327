"""Baseline whale optimization: convergence schedules, coefficient draws,
and the classical three-phase position update (search / encircle / spiral).

The trial loop here is shared with the adaptive variant: positions are all
updated from the previous generation, clamped, batch-evaluated (exactly N
evaluations per iteration), and the incumbent best refreshed once.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .core import (
    EvaluationError,
    Individual,
    Objective,
    SwarmState,
    TrialAbortedError,
    TrialReport,
    clamp,
    rng_stream,
)
from .initialization import init_good_nodes, init_random


def linear_factor(t: int, T: int) -> float:
    """Convergence factor decreasing linearly from 2 at t=0 to 0 at t=T."""
    if T < 1 or not (0 <= t <= T):
        raise ValueError(f"need 0 <= t <= T and T >= 1, got t={t}, T={T}")
    return 2.0 * (1.0 - t / T)


def sigmoid_factor(t: int, T: int) -> float:
    """Sigmoid convergence factor: 2 - 2/(1 + exp(-25*(t/T - 0.5))).

    Slow-fast-slow decay from ~2 to ~0 with an exact value of 1 at t = T/2.
    """
    if T < 1 or not (0 <= t <= T):
        raise ValueError(f"need 0 <= t <= T and T >= 1, got t={t}, T={T}")
    return 2.0 - 2.0 / (1.0 + np.exp(-25.0 * (t / T - 0.5)))


@dataclass
class WoaCoefficients:
    """Per-individual random coefficients for one position update.

    A[i] in [-a, a] and C[i] in [0, 2) componentwise; p selects the update
    phase and l parameterizes the spiral. b is the spiral shape constant.
    """

    a: float
    A: np.ndarray
    C: np.ndarray
    p: float
    l: float
    b: float = 1.0


def draw_coefficients(
    a: float, rng: np.random.Generator, dim: int, b: float = 1.0
) -> WoaCoefficients:
    """Draw A = 2a*r1 - a and C = 2*r2 componentwise, plus fresh p and l.

    Draw order (r1 vector, r2 vector, p, l) is part of the determinism
    contract and must not be reordered.
    """
    r1 = rng.random(dim)
    r2 = rng.random(dim)
    A = 2.0 * a * r1 - a
    C = 2.0 * r2
    p = rng.random()
    l = 2.0 * rng.random() - 1.0
    return WoaCoefficients(a=a, A=A, C=C, p=p, l=l, b=b)


def gate_magnitude(A: np.ndarray, mode: str = "first") -> float:
    """Magnitude used by the |A| >= 1 branch test.

    "first" reads the first component (scalar gating, the classical
    reading); "norm" uses the Euclidean norm scaled to component size.
    """
    if mode == "first":
        return float(abs(A[0]))
    if mode == "norm":
        return float(np.linalg.norm(A) / np.sqrt(A.size))
    raise ValueError(f"unknown gate mode {mode!r}")


@dataclass
class WoaParams:
    """Baseline algorithm settings; defaults follow the common benchmark setup."""

    n_pop: int = 30
    n_iter: int = 500
    b: float = 1.0
    gate: str = "first"

    def __post_init__(self):
        if self.n_pop < 2 or self.n_iter < 0:
            raise ValueError("need n_pop >= 2 and n_iter >= 0")


def woa_step(state: SwarmState, objective: Objective, params: WoaParams | None = None) -> None:
    """One synchronous iteration of the classical whale update.

    Per individual: with p < 0.5 move relative to a random individual when
    |A| >= 1 (search) or to the best when |A| < 1 (encircle); with p >= 0.5
    take the logarithmic spiral around the best. All new positions come
    from the previous generation, then are clamped and batch-evaluated.
    """
    if params is None:
        params = WoaParams()
    if state.t >= state.T:
        raise ValueError("iteration budget exhausted")
    rng = state.rng
    a = linear_factor(state.t, state.T)
    old = [ind.position for ind in state.population]
    best_x = state.best.position
    n = len(old)

    new_positions = []
    for x in old:
        coeffs = draw_coefficients(a, rng, x.size, b=params.b)
        if coeffs.p < 0.5:
            if gate_magnitude(coeffs.A, params.gate) >= 1.0:
                x_rand = old[int(rng.integers(n))]
                dist = np.abs(coeffs.C * x_rand - x)
                moved = x_rand - coeffs.A * dist
            else:
                dist = np.abs(coeffs.C * best_x - x)
                moved = best_x - coeffs.A * dist
        else:
            dist = np.abs(best_x - x)
            moved = dist * np.exp(params.b * coeffs.l) * np.cos(2.0 * np.pi * coeffs.l) + best_x
        new_positions.append(clamp(moved, objective.space))

    _apply_generation(state, new_positions, objective)


def _apply_generation(state: SwarmState, positions: list[np.ndarray], objective: Objective) -> None:
    """Install, batch-evaluate, refresh the incumbent best, advance the clock."""
    for ind, pos in zip(state.population, positions):
        ind.move(pos)
    for ind in state.population:
        ind.fitness = objective(ind.position)
    state.refresh_best()
    state.t += 1


def evaluate_population(state: SwarmState, objective: Objective) -> None:
    """Evaluate any unevaluated individuals and seed the incumbent best."""
    for ind in state.population:
        if ind.fitness is None:
            ind.fitness = objective(ind.position)
    state.refresh_best()


def run_trial(
    algorithm: str,
    step,
    objective: Objective,
    n_pop: int,
    n_iter: int,
    seed: int,
    init_mode: str,
) -> TrialReport:
    """Initialize, iterate `step` n_iter times, and report the trace.

    The trace holds the best fitness after initialization and after each
    iteration (n_iter + 1 entries) and is non-increasing by construction.
    An evaluation failure aborts the trial; the partial trace is attached
    to the raised error.
    """
    started = time.perf_counter()
    rng = rng_stream(seed)
    if init_mode == "good-nodes":
        population = init_good_nodes(n_pop, objective.space)
    elif init_mode == "random":
        population = init_random(n_pop, objective.space, rng)
    else:
        raise ValueError(f"unknown init mode {init_mode!r}")

    state = SwarmState(
        population=population,
        best=Individual(population[0].position.copy(), None),
        t=0,
        T=n_iter,
        rng=rng,
    )
    trace: list[float] = []
    try:
        evaluate_population(state, objective)
        trace.append(state.best.fitness)
        for _ in range(n_iter):
            step(state, objective)
            trace.append(state.best.fitness)
    except EvaluationError as exc:
        partial = TrialReport(
            algorithm=algorithm,
            objective=objective.name,
            seed=seed,
            trace=trace,
            final_best=state.best.copy(),
            evaluations=objective.evaluations,
            wall_time=time.perf_counter() - started,
            error=str(exc),
        )
        raise TrialAbortedError(f"{algorithm} trial aborted: {exc}", partial) from exc

    return TrialReport(
        algorithm=algorithm,
        objective=objective.name,
        seed=seed,
        trace=trace,
        final_best=state.best.copy(),
        evaluations=objective.evaluations,
        wall_time=time.perf_counter() - started,
    )


def optimize(
    objective: Objective,
    params: WoaParams | None = None,
    seed: int = 0,
    init_mode: str = "random",
) -> TrialReport:
    """Run the baseline algorithm for a full trial and return its report."""
    if params is None:
        params = WoaParams()

    def step(state: SwarmState, obj: Objective) -> None:
        woa_step(state, obj, params)

    return run_trial("woa", step, objective, params.n_pop, params.n_iter, seed, init_mode)
