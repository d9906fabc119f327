"""The tuning box: named hyperparameter dimensions with ranges and
integrality flags, and the decoding of raw optimizer vectors.

Dimension order is fixed and is the wire contract: an optimizer sends a
plain vector of reals and this module is the only place that knows what
each slot means.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Dimension:
    name: str
    lower: float
    upper: float
    integer: bool = False


# wire order: raw vector slot i decodes through DIMENSIONS[i]
DIMENSIONS = (
    Dimension("learning_rate", 0.01, 0.3),
    Dimension("max_depth", 2, 10, integer=True),
    Dimension("n_estimators", 50, 500, integer=True),
    Dimension("subsample", 0.5, 1.0),
    Dimension("colsample", 0.5, 1.0),
    Dimension("min_child_weight", 1.0, 10.0),
)

# documented baseline vector: library-default style settings, inside the box
DEFAULT_VECTOR = (0.1, 3.0, 100.0, 1.0, 1.0, 1.0)


class BoxError(ValueError):
    """A raw vector does not fit the box; names the offending dimension."""


def round_half_away_from_zero(value: float) -> int:
    return int(math.floor(value + 0.5)) if value >= 0 else -int(math.floor(-value + 0.5))


def lower_bounds() -> list[float]:
    return [d.lower for d in DIMENSIONS]


def upper_bounds() -> list[float]:
    return [d.upper for d in DIMENSIONS]


def decode(x) -> dict:
    """Raw optimizer vector -> named hyperparameters.

    Integer dimensions are rounded half away from zero; everything else
    passes through. Raises BoxError outside the box, naming the dimension.
    """
    values = [float(v) for v in x]
    if len(values) != len(DIMENSIONS):
        raise BoxError(f"expected {len(DIMENSIONS)} values, got {len(values)}")
    params = {}
    for value, dim in zip(values, DIMENSIONS):
        if not (dim.lower <= value <= dim.upper):
            raise BoxError(
                f"dimension '{dim.name}' = {value!r} outside [{dim.lower}, {dim.upper}]"
            )
        params[dim.name] = round_half_away_from_zero(value) if dim.integer else value
    return params
