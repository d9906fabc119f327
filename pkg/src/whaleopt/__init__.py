"""Whale optimization algorithms: the classical WOA baseline and the
nonlinear adaptive variant NAWOA, with a benchmark suite, an experiment
harness, and a subprocess protocol for tuning external black boxes.
"""

from .core import (
    BudgetExceededError,
    DimensionMismatchError,
    EvaluationError,
    Individual,
    Objective,
    SearchSpace,
    SwarmState,
    TrialAbortedError,
    TrialReport,
    clamp,
    rng_stream,
)
from .initialization import (
    GoodNodesConfig,
    good_nodes_unit,
    init_good_nodes,
    init_random,
    map_to_space,
)
from .nawoa import NawoaParams
from .nawoa import optimize as nawoa_optimize
from .woa import WoaParams, linear_factor, sigmoid_factor
from .woa import optimize as woa_optimize

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "DimensionMismatchError",
    "EvaluationError",
    "GoodNodesConfig",
    "Individual",
    "NawoaParams",
    "Objective",
    "SearchSpace",
    "SwarmState",
    "TrialAbortedError",
    "TrialReport",
    "WoaParams",
    "clamp",
    "good_nodes_unit",
    "init_good_nodes",
    "init_random",
    "linear_factor",
    "map_to_space",
    "nawoa_optimize",
    "rng_stream",
    "sigmoid_factor",
    "woa_optimize",
    "__version__",
]
