"""Feature engineering: cleaned text cells -> fully numeric design matrix.

Categoricals are label-encoded in ascending lexicographic order (stable
under row shuffles), dates become whole days since 1970-01-01, durations
become seconds, identifiers are dropped, and the target column is split off
into its own vector.
"""

from bisect import bisect_left
from dataclasses import dataclass, field

import numpy as np

from adview.cells import parse_date_days, parse_duration, parse_numeric  # noqa: F401  (parse_duration is part of the public surface)
from adview.errors import CellError, UnknownCategoryError


@dataclass(frozen=True)
class LabelEncoder:
    """Category text -> 0-based code, assigned in sorted lexicographic order."""

    column_name: str
    classes: tuple

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(self.classes))
        if not self.classes:
            raise ValueError("label encoder needs at least one class")
        if list(self.classes) != sorted(set(self.classes)):
            raise ValueError("classes must be distinct and lexicographically sorted")

    @property
    def mapping(self) -> dict:
        return {c: i for i, c in enumerate(self.classes)}

    def code(self, value: str) -> int:
        i = bisect_left(self.classes, value)
        if i == len(self.classes) or self.classes[i] != value:
            raise UnknownCategoryError(
                f"column {self.column_name!r}: unknown category {value!r}"
            )
        return i


def fit_label_encoder(cells, column_name: str = "") -> LabelEncoder:
    """Encoder over the distinct values of `cells` (which must be nonempty)."""
    cells = list(cells)
    if not cells:
        raise ValueError("cannot fit a label encoder on no cells")
    return LabelEncoder(column_name=column_name, classes=tuple(sorted(set(cells))))


@dataclass
class FeatureMatrix:
    """n x d design matrix of 64-bit reals with unique column names."""

    values: np.ndarray
    feature_names: tuple

    def __post_init__(self):
        self.values = np.ascontiguousarray(self.values, dtype=np.float64)
        self.feature_names = tuple(self.feature_names)
        if self.values.ndim != 2:
            raise ValueError("feature matrix must be 2-D")
        if self.values.shape[1] != len(self.feature_names):
            raise ValueError("feature name count does not match column count")
        if self.values.shape[1] < 1:
            raise ValueError("feature matrix needs at least one column")
        if len(set(self.feature_names)) != len(self.feature_names):
            raise ValueError("feature names must be unique")
        if self.values.size and not np.isfinite(self.values).all():
            raise ValueError("feature matrix entries must be finite")

    @property
    def n_rows(self) -> int:
        return self.values.shape[0]

    @property
    def n_features(self) -> int:
        return self.values.shape[1]


@dataclass
class TargetVector:
    """Length-n vector of 64-bit real targets."""

    values: np.ndarray
    name: str

    def __post_init__(self):
        self.values = np.ascontiguousarray(self.values, dtype=np.float64)
        if self.values.ndim != 1:
            raise ValueError("target vector must be 1-D")
        if self.values.size and not np.isfinite(self.values).all():
            raise ValueError("target entries must be finite")


def fit_encoders(table, schema) -> dict:
    """Fit one LabelEncoder per categorical schema column of a cleaned table."""
    encoders = {}
    for j, name in enumerate(table.header):
        if schema.column(name).kind == "categorical" and table.n_rows:
            encoders[name] = fit_label_encoder(table.column_values(j), column_name=name)
    return encoders


def encode_cell(cell: str, kind: str, encoder: LabelEncoder | None = None) -> float:
    """Convert one cleaned cell to its numeric form for the given column kind."""
    if kind == "numeric" or kind == "target":
        value = parse_numeric(cell)
        if not np.isfinite(value):
            raise ValueError(f"numeric overflow: {cell!r}")
        return value
    if kind == "categorical":
        if encoder is None:
            raise ValueError("categorical column has no fitted encoder")
        return float(encoder.code(cell))
    if kind == "date":
        return float(parse_date_days(cell))
    if kind == "duration":
        return float(parse_duration(cell))
    raise ValueError(f"column kind {kind!r} is not encodable")


def encode_table(table, schema, encoders: dict):
    """Encode a cleaned RawTable into (FeatureMatrix, TargetVector).

    Column order follows the schema; identifier columns are dropped; the
    target column is extracted. Raises CellError naming row and column on
    any unparseable cell, UnknownCategoryError on unseen categories.
    """
    feature_columns = []
    feature_names = []
    target_values = None
    target_name = None

    for j, name in enumerate(table.header):
        spec = schema.column(name)
        if spec.kind == "identifier":
            continue
        encoder = encoders.get(name)
        column = np.empty(table.n_rows, dtype=np.float64)
        for i, row in enumerate(table.rows):
            try:
                column[i] = encode_cell(row[j], spec.kind, encoder)
            except UnknownCategoryError:
                raise
            except ValueError as exc:
                raise CellError(f"row {i + 1}, column {name!r}: {exc}") from exc
        if spec.kind == "target":
            target_values = column
            target_name = name
        else:
            feature_columns.append(column)
            feature_names.append(name)

    matrix = (
        np.column_stack(feature_columns)
        if feature_columns
        else np.empty((table.n_rows, 0), dtype=np.float64)
    )
    features = FeatureMatrix(values=matrix, feature_names=tuple(feature_names))
    target = TargetVector(values=target_values, name=target_name)
    return features, target
