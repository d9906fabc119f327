"""Reference external evaluator for the nawoa-extobj protocol: trains a
gradient-boosted 3-class classifier on a fixed synthetic imbalanced task
and reports negated macro F1 as fitness.
"""

from .box import DEFAULT_VECTOR, DIMENSIONS, BoxError, decode
from .metrics import DegenerateClassError, MetricPanel, compute_metrics
from .model import evaluate_vector
from .report import report_run

__version__ = "0.1.0"

__all__ = [
    "BoxError",
    "DEFAULT_VECTOR",
    "DIMENSIONS",
    "DegenerateClassError",
    "MetricPanel",
    "compute_metrics",
    "decode",
    "evaluate_vector",
    "report_run",
    "__version__",
]
