"""Population initialization: good-nodes set and pseudo-random baseline.

The good-nodes construction places M points in the unit hypercube by
taking fractional parts of integer multiples of a fixed generator vector.
It is fully deterministic and spreads points far more evenly than uniform
pseudo-random sampling, which concentrates early search coverage.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DimensionMismatchError, Individual, SearchSpace


def smallest_prime_at_least(n: int) -> int:
    """Smallest prime >= n (trial division; n stays tiny here)."""
    candidate = max(2, int(n))
    while True:
        for d in range(2, int(candidate**0.5) + 1):
            if candidate % d == 0:
                break
        else:
            return candidate
        candidate += 1


def cyclotomic_offsets(dim: int) -> np.ndarray:
    """Generator vector g_j = 2*cos(2*pi*j/p), p the smallest prime >= 2*dim + 3.

    The classical dimension-robust realization of a good-nodes generator.
    Entries may be negative; only their fractional multiples matter.
    """
    p = smallest_prime_at_least(2 * dim + 3)
    j = np.arange(1, dim + 1, dtype=float)
    return 2.0 * np.cos(2.0 * np.pi * j / p)

def power_offsets(dim: int, r: float) -> np.ndarray:
    """Generator vector g_j = r**j for a fixed offset parameter r > 0."""
    if r <= 0:
        raise ValueError("offset parameter r must be positive")
    return float(r) ** np.arange(1, dim + 1, dtype=float)


@dataclass(frozen=True)
class GoodNodesConfig:
    """Node count, dimension, and the per-dimension generator offsets."""

    count: int
    dim: int
    generator_offsets: np.ndarray

    def __post_init__(self):
        offsets = np.asarray(self.generator_offsets, dtype=float)
        object.__setattr__(self, "generator_offsets", offsets)
        if self.count < 1 or self.dim < 1:
            raise ValueError("count and dim must be positive")
        if offsets.shape != (self.dim,):
            raise DimensionMismatchError(
                f"need {self.dim} generator offsets, got shape {offsets.shape}"
            )
        if not np.all(np.isfinite(offsets)) or np.any(offsets == 0.0):
            raise ValueError("generator offsets must be finite and non-zero")

    @classmethod
    def default(cls, count: int, dim: int) -> "GoodNodesConfig":
        return cls(count, dim, cyclotomic_offsets(dim))


def good_nodes_unit(config: GoodNodesConfig) -> np.ndarray:
    """(M, D) matrix with entry (k, j) = frac((k+1) * g_j), rows k = 0..M-1.

    frac(x) = x - floor(x), so entries land in [0, 1) for any sign of g_j.
    Pure function of the config: no randomness.
    """
    k = np.arange(1, config.count + 1, dtype=float)[:, None]
    products = k * config.generator_offsets[None, :]
    return products - np.floor(products)


def map_to_space(unit_points: np.ndarray, space: SearchSpace) -> np.ndarray:
    """Affine map of unit-cube points onto the search box, per dimension."""
    unit_points = np.asarray(unit_points, dtype=float)
    if unit_points.ndim != 2 or unit_points.shape[1] != space.dim:
        raise DimensionMismatchError(
            f"unit points have shape {unit_points.shape}, space has dim {space.dim}"
        )
    return space.lower + unit_points * (space.upper - space.lower)


def init_good_nodes(
    n: int, space: SearchSpace, generator_offsets: np.ndarray | None = None
) -> list[Individual]:
    """Deterministic population of n individuals from the good-nodes set."""
    if n < 2:
        raise ValueError("population size must be at least 2")
    if generator_offsets is None:
        config = GoodNodesConfig.default(n, space.dim)
    else:
        config = GoodNodesConfig(n, space.dim, generator_offsets)
    points = map_to_space(good_nodes_unit(config), space)
    return [Individual(points[i].copy()) for i in range(n)]


def init_random(n: int, space: SearchSpace, rng: np.random.Generator) -> list[Individual]:
    """Population of n individuals drawn uniformly inside the box."""
    if n < 2:
        raise ValueError("population size must be at least 2")
    points = space.lower + rng.random((n, space.dim)) * (space.upper - space.lower)
    return [Individual(points[i].copy()) for i in range(n)]


def min_pairwise_distance(points: np.ndarray) -> float:
    """Smallest Euclidean distance between any two rows (coverage proxy)."""
    points = np.asarray(points, dtype=float)
    diffs = points[:, None, :] - points[None, :, :]
    dists = np.sqrt(np.sum(diffs * diffs, axis=-1))
    dists[np.diag_indices(len(points))] = np.inf
    return float(dists.min())
