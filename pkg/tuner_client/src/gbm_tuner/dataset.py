"""Fixed synthetic task: an imbalanced 3-class classification problem.

Every seed is frozen so that identical hyperparameter vectors always map
to identical fitness values, which the optimizer's determinism relies on.
"""

from __future__ import annotations

from sklearn.datasets import make_classification
from sklearn.model_selection import train_test_split

DATASET_SEED = 20240811
N_SAMPLES = 1500
N_FEATURES = 20
CLASS_PRIORS = (0.5, 0.3, 0.2)
TEST_FRACTION = 0.3


def load_splits():
    """(X_train, X_val, y_train, y_val): 70/30 stratified, fully seeded."""
    X, y = make_classification(
        n_samples=N_SAMPLES,
        n_features=N_FEATURES,
        n_informative=8,
        n_redundant=4,
        n_classes=3,
        weights=list(CLASS_PRIORS),
        class_sep=0.8,
        flip_y=0.06,
        random_state=DATASET_SEED,
    )
    return train_test_split(
        X, y, test_size=TEST_FRACTION, stratify=y, random_state=DATASET_SEED
    )
