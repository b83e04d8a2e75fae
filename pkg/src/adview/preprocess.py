"""MinMax scaling to [0, 1] and deterministic seeded train/test splitting."""

import math
from dataclasses import dataclass

import numpy as np

from adview.errors import FeatureMismatchError
from adview.features import FeatureMatrix
from adview.seeding import STREAM_SPLIT, make_rng


@dataclass
class MinMaxScaler:
    """Per-feature extrema for (x - min) / (max - min) scaling.

    Constant columns (min == max) transform to 0 everywhere. Values outside
    the fitted range extrapolate linearly, so transformed test data may lie
    outside [0, 1]; fitted data never does.
    """

    minimum: np.ndarray
    maximum: np.ndarray
    feature_names: tuple

    def __post_init__(self):
        self.minimum = np.asarray(self.minimum, dtype=np.float64)
        self.maximum = np.asarray(self.maximum, dtype=np.float64)
        self.feature_names = tuple(self.feature_names)
        if self.minimum.shape != self.maximum.shape or self.minimum.ndim != 1:
            raise ValueError("scaler extrema must be matching 1-D vectors")
        if (self.minimum > self.maximum).any():
            raise ValueError("scaler minimum exceeds maximum")

    def _check(self, features: FeatureMatrix):
        if features.feature_names != self.feature_names:
            raise FeatureMismatchError(
                f"scaler fitted on {self.feature_names}, got {features.feature_names}"
            )

    def transform(self, features: FeatureMatrix) -> FeatureMatrix:
        self._check(features)
        span = self.maximum - self.minimum
        safe_span = np.where(span == 0.0, 1.0, span)
        scaled = (features.values - self.minimum) / safe_span
        scaled[:, span == 0.0] = 0.0
        return FeatureMatrix(values=scaled, feature_names=self.feature_names)

    def inverse_transform(self, scaled: FeatureMatrix) -> FeatureMatrix:
        self._check(scaled)
        span = self.maximum - self.minimum
        restored = self.minimum + scaled.values * span
        return FeatureMatrix(values=restored, feature_names=self.feature_names)


def fit_minmax(features: FeatureMatrix) -> MinMaxScaler:
    """Column-wise extrema of the input; requires at least one row."""
    if features.n_rows < 1:
        raise ValueError("cannot fit a scaler on an empty matrix")
    return MinMaxScaler(
        minimum=features.values.min(axis=0),
        maximum=features.values.max(axis=0),
        feature_names=features.feature_names,
    )


@dataclass(frozen=True)
class SplitResult:
    """Disjoint-exhaustive row partition; |train| = floor(ratio * n)."""

    train_indices: tuple
    test_indices: tuple
    ratio: float
    seed: int


def train_test_split(n: int, ratio: float, seed: int) -> SplitResult:
    """Seeded deterministic shuffle-then-cut split of row indices 0..n-1.

    The shuffle is Fisher-Yates driven by PCG64, so the same (n, ratio,
    seed) always produces the identical partition on any platform.
    """
    if n < 2:
        raise ValueError(f"need at least 2 rows to split, got {n}")
    if not 0.0 < ratio < 1.0:
        raise ValueError(f"split ratio must be in (0, 1), got {ratio}")

    rng = make_rng(seed, STREAM_SPLIT)
    indices = list(range(n))
    for i in range(n - 1, 0, -1):
        j = int(rng.integers(0, i + 1))
        indices[i], indices[j] = indices[j], indices[i]

    n_train = int(math.floor(ratio * n))
    return SplitResult(
        train_indices=tuple(indices[:n_train]),
        test_indices=tuple(indices[n_train:]),
        ratio=ratio,
        seed=seed,
    )
