"""Shared coercion and validation for the model fitters."""

import numpy as np

from adview.errors import FeatureMismatchError


def as_design_matrix(X) -> np.ndarray:
    """FeatureMatrix or array-like -> contiguous float64 n x d array."""
    values = getattr(X, "values", X)
    arr = np.ascontiguousarray(values, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError("design matrix must be 2-D")
    return arr


def as_target(y) -> np.ndarray:
    """TargetVector or array-like -> contiguous float64 length-n vector."""
    values = getattr(y, "values", y)
    arr = np.ascontiguousarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError("target must be 1-D")
    return arr


def check_training_data(X: np.ndarray, y: np.ndarray):
    if X.shape[0] == 0:
        raise ValueError("cannot fit on empty data")
    if X.shape[0] != y.shape[0]:
        raise ValueError(f"X has {X.shape[0]} rows but y has {y.shape[0]}")


def check_predict_input(X, n_features: int) -> np.ndarray:
    arr = as_design_matrix(X)
    if arr.shape[1] != n_features:
        raise FeatureMismatchError(
            f"model expects {n_features} features, got {arr.shape[1]}"
        )
    return arr
