"""Ordinary least squares via normal equations, with a ridge fallback.

The Gram system of the intercept-augmented design matrix is solved directly.
If it is singular (duplicated columns, n < d+1), a small ridge term is added
and the model is flagged as regularized.
"""

from dataclasses import dataclass

import numpy as np

from adview.models._common import as_design_matrix, as_target, check_predict_input, check_training_data

RIDGE_LAMBDA = 1e-8


@dataclass
class LinearModel:
    weights: np.ndarray
    intercept: float
    regularized: bool = False

    @property
    def n_features(self) -> int:
        return self.weights.shape[0]

    def predict(self, X) -> np.ndarray:
        arr = check_predict_input(X, self.n_features)
        return arr @ self.weights + self.intercept


def fit_linear(X, y) -> LinearModel:
    """Minimize the sum of squared residuals of y against [X, 1]."""
    X = as_design_matrix(X)
    y = as_target(y)
    check_training_data(X, y)

    augmented = np.column_stack([X, np.ones(X.shape[0])])
    gram = augmented.T @ augmented
    moment = augmented.T @ y

    regularized = False
    theta = None
    try:
        theta = np.linalg.solve(gram, moment)
    except np.linalg.LinAlgError:
        pass
    if theta is None or not np.isfinite(theta).all():
        ridge = gram + RIDGE_LAMBDA * np.eye(gram.shape[0])
        theta = np.linalg.solve(ridge, moment)
        regularized = True

    return LinearModel(weights=theta[:-1], intercept=float(theta[-1]), regularized=regularized)
