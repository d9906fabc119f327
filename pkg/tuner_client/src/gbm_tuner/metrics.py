"""Evaluation panel for the 3-class task.

Macro averages are unweighted means over classes; micro F1 equals
accuracy for single-label multi-class; the geometric-mean score is the
geometric mean of per-class recalls (zero as soon as one class is missed
entirely); AUC is one-vs-rest, macro-averaged.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sklearn.metrics import (
    accuracy_score,
    confusion_matrix,
    f1_score,
    precision_score,
    recall_score,
    roc_auc_score,
)

N_CLASSES = 3


class DegenerateClassError(ValueError):
    """Some class has no true instances, so per-class metrics are undefined."""


@dataclass
class MetricPanel:
    accuracy: float
    macro_precision: float
    macro_recall: float
    macro_f1: float
    micro_f1: float
    roc_auc: float
    g_mean: float
    confusion: np.ndarray

    def as_dict(self) -> dict:
        return {
            "accuracy": self.accuracy,
            "macro_precision": self.macro_precision,
            "macro_recall": self.macro_recall,
            "macro_f1": self.macro_f1,
            "micro_f1": self.micro_f1,
            "roc_auc": self.roc_auc,
            "g_mean": self.g_mean,
        }


def compute_metrics(y_true, y_pred, y_score, n_classes: int = N_CLASSES) -> MetricPanel:
    """Full panel from labels, predictions, and per-class scores."""
    y_true = np.asarray(y_true)
    y_pred = np.asarray(y_pred)
    y_score = np.asarray(y_score, dtype=float)
    if y_true.shape != y_pred.shape:
        raise ValueError("y_true and y_pred must be the same length")
    if y_score.shape != (y_true.size, n_classes):
        raise ValueError(f"y_score must have shape (n, {n_classes})")
    present = np.unique(y_true)
    if len(present) < n_classes:
        missing = sorted(set(range(n_classes)) - set(present.tolist()))
        raise DegenerateClassError(f"classes {missing} absent from y_true")

    labels = list(range(n_classes))
    matrix = confusion_matrix(y_true, y_pred, labels=labels)
    recalls = matrix.diagonal() / matrix.sum(axis=1)
    if n_classes == 2:
        # binary AUC is symmetric across classes, so the one-vs-rest macro
        # average equals the positive-class AUC
        auc = float(roc_auc_score(y_true, y_score[:, 1]))
    else:
        auc = float(
            roc_auc_score(y_true, y_score, multi_class="ovr", average="macro", labels=labels)
        )
    return MetricPanel(
        accuracy=float(accuracy_score(y_true, y_pred)),
        macro_precision=float(precision_score(y_true, y_pred, labels=labels, average="macro", zero_division=0)),
        macro_recall=float(recall_score(y_true, y_pred, labels=labels, average="macro", zero_division=0)),
        macro_f1=float(f1_score(y_true, y_pred, labels=labels, average="macro", zero_division=0)),
        micro_f1=float(f1_score(y_true, y_pred, labels=labels, average="micro", zero_division=0)),
        roc_auc=auc,
        g_mean=float(np.prod(recalls) ** (1.0 / n_classes)),
        confusion=matrix,
    )
