"""Nonlinear adaptive whale optimization (NAWOA).

Replaces each classical phase with an adaptive counterpart: search-for-prey
becomes leader-followers foraging, encircling gains a spiral-flight
disturbance, and the spiral update becomes triangular hunting. The
convergence factor follows the sigmoid schedule, and the population starts
from the deterministic good-nodes set.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Individual, Objective, SwarmState, TrialReport, clamp
from .woa import (
    WoaCoefficients,
    _apply_generation,
    draw_coefficients,
    gate_magnitude,
    run_trial,
    sigmoid_factor,
)

# cap on spiral exponents so e^{Z*L} stays finite for far-apart individuals;
# never binds once the swarm has contracted
_EXP_CAP = 50.0


@dataclass
class NawoaParams:
    """Adaptive algorithm settings; k = b = 1 reproduce the reference setup."""

    k: float = 1.0
    b: float = 1.0
    n_pop: int = 30
    n_iter: int = 500
    gate: str = "first"

    def __post_init__(self):
        if self.n_pop < 2 or self.n_iter < 0:
            raise ValueError("need n_pop >= 2 and n_iter >= 0")


def mean_position(population: list[Individual]) -> np.ndarray:
    """Componentwise arithmetic mean of all positions."""
    if not population:
        raise ValueError("population is empty")
    return np.mean([ind.position for ind in population], axis=0)


def leader_followers_step(
    x: np.ndarray, best: np.ndarray, mean: np.ndarray, t: int, T: int
) -> np.ndarray:
    """Leader-guided move: (1 - t/T) * best + |mean - best| componentwise.

    The result does not depend on x; every individual taking this branch
    in the same iteration lands on the same point.
    """
    del x
    return (1.0 - t / T) * best + np.abs(mean - best)


def spiral_step_size(t: int, T: int, k: float = 1.0) -> float:
    """Spiral flight step size Z = exp(k * cos(pi * (1 - t/T)))."""
    if not (0 <= t <= T):
        raise ValueError(f"need 0 <= t <= T, got t={t}, T={T}")
    return float(np.exp(k * np.cos(np.pi * (1.0 - t / T))))


def dynamic_encircle_step(
    x: np.ndarray,
    best: np.ndarray,
    coeffs: WoaCoefficients,
    z: float,
    rng: np.random.Generator,
) -> np.ndarray:
    """Encircle the best with a spiral-flight disturbance.

    D = |C*best - x|; L = 2r - 1 with fresh uniform r; the new position is
    best + e^{Z*L} * cos(2*pi*L) * |A*D|.
    """
    dist = np.abs(coeffs.C * best - x)
    l = 2.0 * rng.random() - 1.0
    return best + np.exp(min(z * l, _EXP_CAP)) * np.cos(2.0 * np.pi * l) * np.abs(coeffs.A * dist)


def triangular_step_length(l1: np.ndarray, l2: np.ndarray, gamma: float) -> np.ndarray:
    """Law-of-cosines step: sqrt(|L1^2 + L2^2 - 2*L1*L2*cos(gamma)|)."""
    return np.sqrt(np.abs(l1 * l1 + l2 * l2 - 2.0 * l1 * l2 * np.cos(gamma)))


def triangular_hunt_step(
    x: np.ndarray,
    best: np.ndarray,
    coeffs: WoaCoefficients,
    z: float,
    t: int,
    T: int,
    rng: np.random.Generator,
) -> np.ndarray:
    """Triangular hunting move around the best individual.

    A decaying random scale r = rand * 0.1 * (1 - t/T), side lengths
    L1 = |best - x| and L2 = L1 * rand, a random angle gamma, and the
    law-of-cosines step L combine into
    best*L1 + r*L + e^{Z*L} * cos(2*pi*L) * |A*D|  with D = |C*best - x|.
    Draw order: r's uniform, then L2's, then gamma's.
    """
    r = rng.random() * 0.1 * (1.0 - t / T)
    l1 = np.abs(best - x)
    d_prime = l1
    l2 = d_prime * rng.random()
    gamma = 2.0 * np.pi * rng.random()
    step_len = triangular_step_length(l1, l2, gamma)
    dist = np.abs(coeffs.C * best - x)
    spiral = np.exp(np.minimum(z * step_len, _EXP_CAP)) * np.cos(2.0 * np.pi * step_len)
    return best * d_prime + r * step_len + spiral * np.abs(coeffs.A * dist)


def nawoa_step(state: SwarmState, params: NawoaParams, objective: Objective) -> None:
    """One synchronous adaptive iteration.

    The sigmoid factor drives A; the classical p / |A| tests dispatch each
    individual to leader-followers (p < 0.5, |A| >= 1), dynamic encircling
    (p < 0.5, |A| < 1), or triangular hunting (p >= 0.5).
    """
    if state.t >= state.T:
        raise ValueError("iteration budget exhausted")
    rng = state.rng
    t, T = state.t, state.T
    a = sigmoid_factor(t, T)
    z = spiral_step_size(t, T, params.k)
    old = [ind.position for ind in state.population]
    best_x = state.best.position
    mean_x = mean_position(state.population)

    new_positions = []
    for x in old:
        coeffs = draw_coefficients(a, rng, x.size, b=params.b)
        if coeffs.p < 0.5:
            if gate_magnitude(coeffs.A, params.gate) >= 1.0:
                moved = leader_followers_step(x, best_x, mean_x, t, T)
            else:
                moved = dynamic_encircle_step(x, best_x, coeffs, z, rng)
        else:
            moved = triangular_hunt_step(x, best_x, coeffs, z, t, T, rng)
        new_positions.append(clamp(moved, objective.space))

    _apply_generation(state, new_positions, objective)


def optimize(
    objective: Objective,
    params: NawoaParams | None = None,
    seed: int = 0,
    init_mode: str = "good-nodes",
) -> TrialReport:
    """Run NAWOA for a full trial and return its report."""
    if params is None:
        params = NawoaParams()

    def step(state: SwarmState, obj: Objective) -> None:
        nawoa_step(state, params, obj)

    return run_trial("nawoa", step, objective, params.n_pop, params.n_iter, seed, init_mode)
