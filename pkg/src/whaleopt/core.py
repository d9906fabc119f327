"""Shared domain types: search box, individuals, swarm state, objectives.

All algorithms in this package minimize. Randomness is always threaded
through an explicit ``numpy.random.Generator`` owned by the caller; there
is no module-level RNG state, so every run is reproducible from its seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class DimensionMismatchError(ValueError):
    """A vector's length does not match the search space dimension."""


class EvaluationError(RuntimeError):
    """An objective evaluation failed; carries the offending position."""

    def __init__(self, message: str, position=None):
        super().__init__(message)
        self.position = None if position is None else np.asarray(position, dtype=float)


class BudgetExceededError(RuntimeError):
    """The objective's evaluation budget was exhausted."""


class TrialAbortedError(RuntimeError):
    """An optimizer trial aborted mid-run; carries the partial report."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


def rng_stream(seed) -> np.random.Generator:
    """Deterministic random stream for a trial.

    PCG64 keyed by the seed (an int, or a sequence of ints for derived
    streams): identical seeds give identical draw sequences across runs
    and platforms for the same numpy build.
    """
    return np.random.Generator(np.random.PCG64(seed))


@dataclass(frozen=True)
class SearchSpace:
    """Axis-aligned feasible box: per-dimension lower/upper bounds."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=float)
        upper = np.asarray(self.upper, dtype=float)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        if lower.ndim != 1 or upper.ndim != 1 or lower.size != upper.size:
            raise DimensionMismatchError(
                f"bound vectors must be 1-d and equal length, got {lower.shape} and {upper.shape}"
            )
        if lower.size < 1:
            raise ValueError("search space needs at least one dimension")
        if not np.all(lower < upper):
            bad = int(np.argmin(upper - lower))
            raise ValueError(f"lower must be < upper in every dimension (violated at {bad})")

    @property
    def dim(self) -> int:
        return self.lower.size

    @classmethod
    def cube(cls, dim: int, lower: float, upper: float) -> "SearchSpace":
        """Box with the same bounds in every dimension."""
        return cls(np.full(dim, float(lower)), np.full(dim, float(upper)))

    def contains(self, position: np.ndarray) -> bool:
        position = np.asarray(position, dtype=float)
        return bool(np.all(position >= self.lower) and np.all(position <= self.upper))


def clamp(position: np.ndarray, space: SearchSpace) -> np.ndarray:
    """Repair an out-of-box position by saturating at the violated bound."""
    position = np.asarray(position, dtype=float)
    if position.shape != (space.dim,):
        raise DimensionMismatchError(
            f"position has shape {position.shape}, space has dim {space.dim}"
        )
    return np.clip(position, space.lower, space.upper)


@dataclass
class Individual:
    """One candidate solution: a position and its cached fitness.

    ``fitness is None`` marks the position as not yet evaluated. Any
    position write must go through :meth:`move`, which drops the cache.
    """

    position: np.ndarray
    fitness: float | None = None

    def __post_init__(self):
        self.position = np.asarray(self.position, dtype=float)

    def move(self, position: np.ndarray) -> None:
        self.position = np.asarray(position, dtype=float)
        self.fitness = None

    def copy(self) -> "Individual":
        return Individual(self.position.copy(), self.fitness)


class Objective:
    """Minimization objective over a search box.

    Wraps the raw evaluator with dimension checks, finiteness checks,
    central evaluation counting, and an optional evaluation budget.
    """

    def __init__(self, space: SearchSpace, fn, name: str = "objective", budget: int | None = None):
        self.space = space
        self.fn = fn
        self.name = name
        self.budget = budget
        self.evaluations = 0

    def __call__(self, position: np.ndarray) -> float:
        position = np.asarray(position, dtype=float)
        if position.shape != (self.space.dim,):
            raise DimensionMismatchError(
                f"{self.name}: position has shape {position.shape}, expected ({self.space.dim},)"
            )
        if self.budget is not None and self.evaluations >= self.budget:
            raise BudgetExceededError(f"{self.name}: budget of {self.budget} evaluations exhausted")
        self.evaluations += 1
        try:
            value = float(self.fn(position))
        except EvaluationError:
            raise
        except Exception as exc:
            raise EvaluationError(f"{self.name}: evaluator raised {exc!r}", position) from exc
        if not np.isfinite(value):
            raise EvaluationError(f"{self.name}: evaluator returned non-finite {value!r}", position)
        return value


@dataclass
class SwarmState:
    """Full mutable optimizer state: population, incumbent best, clock.

    Single-owner: one optimizer instance mutates one state. The random
    stream lives here so every operator draws from the same sequence.
    """

    population: list[Individual]
    best: Individual
    t: int
    T: int
    rng: np.random.Generator

    def __post_init__(self):
        if len(self.population) < 2:
            raise ValueError("population size must be at least 2")
        if not (0 <= self.t <= self.T):
            raise ValueError(f"iteration counter {self.t} outside [0, {self.T}]")

    def refresh_best(self) -> None:
        """Elitist update: adopt the best population member if it improves."""
        idx = int(np.argmin([ind.fitness for ind in self.population]))
        candidate = self.population[idx]
        if self.best.fitness is None or candidate.fitness < self.best.fitness:
            self.best = candidate.copy()


@dataclass
class TrialReport:
    """Outcome of one optimizer run: convergence trace plus final best."""

    algorithm: str
    objective: str
    seed: int
    trace: list[float]
    final_best: Individual
    evaluations: int
    wall_time: float
    error: str | None = None

    @property
    def final_fitness(self) -> float:
        return self.final_best.fitness
