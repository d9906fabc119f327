"""Run report: default-vs-tuned metric panels and confusion matrices."""

from __future__ import annotations

import csv
import json
from pathlib import Path

from .box import DEFAULT_VECTOR, DIMENSIONS, decode
from .dataset import DATASET_SEED
from .model import MODEL_SEED, evaluate_vector


def _write_confusion(path: Path, matrix) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["true\\pred"] + [f"class_{j}" for j in range(matrix.shape[1])])
        for i, row in enumerate(matrix):
            writer.writerow([f"class_{i}"] + [int(v) for v in row])


def report_run(best_x, out_dir) -> Path:
    """Write report.json plus confusion-matrix CSVs for default and tuned.

    Returns the report path. The JSON carries both full metric panels,
    the decoded hyperparameters, and every seed needed for replay.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    default_fitness, default_panel = evaluate_vector(DEFAULT_VECTOR)
    tuned_fitness, tuned_panel = evaluate_vector(best_x)

    payload = {
        "dimension_order": [d.name for d in DIMENSIONS],
        "default_vector": [float(v) for v in DEFAULT_VECTOR],
        "tuned_vector": [float(v) for v in best_x],
        "default_hyperparameters": decode(DEFAULT_VECTOR),
        "tuned_hyperparameters": decode(best_x),
        "default_metrics": default_panel.as_dict(),
        "tuned_metrics": tuned_panel.as_dict(),
        "fitness": {"default": default_fitness, "tuned": tuned_fitness},
        "auc_averaging": "one-vs-rest, macro",
        "seeds": {"dataset": DATASET_SEED, "model": MODEL_SEED},
        "files": {
            "default_confusion": "confusion_default.csv",
            "tuned_confusion": "confusion_tuned.csv",
        },
    }
    report_path = out / "report.json"
    report_path.write_text(json.dumps(payload, indent=2, sort_keys=True))
    _write_confusion(out / "confusion_default.csv", default_panel.confusion)
    _write_confusion(out / "confusion_tuned.csv", tuned_panel.confusion)
    return report_path
