"""Gradient-boosted classifier construction and scoring on the fixed task."""

from __future__ import annotations

from sklearn.ensemble import GradientBoostingClassifier

from .box import decode
from .dataset import load_splits
from .metrics import MetricPanel, compute_metrics

MODEL_SEED = 7

# decoded-params -> (fitness, panel); training is deterministic, so the
# cache is purely a wall-clock optimization for collapsed populations
_cache: dict[tuple, tuple[float, MetricPanel]] = {}


def build_model(params: dict) -> GradientBoostingClassifier:
    """Model from decoded box parameters.

    colsample maps to the per-split feature fraction and min_child_weight
    to the minimum leaf size (rounded up to a whole sample).
    """
    return GradientBoostingClassifier(
        learning_rate=params["learning_rate"],
        max_depth=params["max_depth"],
        n_estimators=params["n_estimators"],
        subsample=params["subsample"],
        max_features=params["colsample"],
        min_samples_leaf=max(1, round(params["min_child_weight"])),
        random_state=MODEL_SEED,
    )


def evaluate_vector(x) -> tuple[float, MetricPanel]:
    """Train on the fixed split, return (fitness, panel) for a raw vector.

    Fitness is the negated validation macro F1: the protocol always
    minimizes, so better models are more negative.
    """
    params = decode(x)
    key = tuple(sorted(params.items()))
    if key in _cache:
        return _cache[key]
    X_train, X_val, y_train, y_val = load_splits()
    model = build_model(params).fit(X_train, y_train)
    panel = compute_metrics(y_val, model.predict(X_val), model.predict_proba(X_val))
    result = (-panel.macro_f1, panel)
    _cache[key] = result
    return result
