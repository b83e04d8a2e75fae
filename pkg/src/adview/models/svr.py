"""Linear epsilon-insensitive support vector regression, trained in the
primal by deterministic full-batch subgradient descent.

Objective: 0.5*||w||^2 + c * sum_i max(0, |y_i - (w.x_i + b)| - epsilon).
Residuals inside the epsilon tube contribute nothing; outside, the
subgradient is the residual sign. Training starts from w = 0, b = 0 and
runs exactly `epochs` constant-step iterations.
"""

from dataclasses import dataclass

import numpy as np

from adview.errors import DivergenceError
from adview.models._common import as_design_matrix, as_target, check_predict_input, check_training_data


@dataclass(frozen=True)
class SvrConfig:
    epsilon: float = 0.1
    c: float = 1.0
    learning_rate: float = 1e-3
    epochs: int = 500
    seed: int = 0  # reserved; the full-batch procedure draws no randomness

    def __post_init__(self):
        if self.epsilon < 0:
            raise ValueError("epsilon must be >= 0")
        if self.c < 0:
            raise ValueError("c must be >= 0")
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be > 0")
        if self.epochs < 0:
            raise ValueError("epochs must be >= 0")


@dataclass
class SvrModel:
    weights: np.ndarray
    intercept: float
    epsilon: float
    c: float
    learning_rate: float
    epochs: int

    @property
    def n_features(self) -> int:
        return self.weights.shape[0]

    def predict(self, X) -> np.ndarray:
        arr = check_predict_input(X, self.n_features)
        return arr @ self.weights + self.intercept


def svr_loss(w: np.ndarray, b: float, X: np.ndarray, y: np.ndarray, epsilon: float, c: float) -> float:
    residuals = y - (X @ w + b)
    hinge = np.maximum(0.0, np.abs(residuals) - epsilon)
    return 0.5 * float(w @ w) + c * float(hinge.sum())


def fit_svr(X, y, config: SvrConfig = SvrConfig()) -> SvrModel:
    X = as_design_matrix(X)
    y = as_target(y)
    check_training_data(X, y)

    w = np.zeros(X.shape[1])
    b = 0.0
    for epoch in range(config.epochs):
        residuals = y - (X @ w + b)
        loss = 0.5 * float(w @ w) + config.c * float(
            np.maximum(0.0, np.abs(residuals) - config.epsilon).sum()
        )
        if not np.isfinite(loss):
            raise DivergenceError(f"SVR loss became non-finite at epoch {epoch}", epoch=epoch)
        signs = np.where(np.abs(residuals) > config.epsilon, np.sign(residuals), 0.0)
        grad_w = w - config.c * (X.T @ signs)
        grad_b = -config.c * float(signs.sum())
        w = w - config.learning_rate * grad_w
        b = b - config.learning_rate * grad_b

    if not (np.isfinite(w).all() and np.isfinite(b)):
        raise DivergenceError(
            f"SVR parameters became non-finite after epoch {config.epochs - 1}",
            epoch=config.epochs - 1,
        )
    return SvrModel(
        weights=w,
        intercept=float(b),
        epsilon=config.epsilon,
        c=config.c,
        learning_rate=config.learning_rate,
        epochs=config.epochs,
    )
