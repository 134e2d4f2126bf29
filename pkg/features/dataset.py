"""
Feature vectors, feature datasets and the canonical feature CSV.
"""
import io
import os
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np
import pandas as pd

from ingest.records import Activity
from utils.errors import IoFailure, MalformedRecord
from windowing.segmenter import Window

from .extractors import DEFAULT_PEAK_THRESHOLD, FEATURE_NAMES, featurize_values

META_COLUMNS = ["user_id", "label"]
CSV_FLOAT_FORMAT = "%.6g"


@dataclass(frozen=True)
class FeatureVector:
    values: np.ndarray
    label: Activity
    user_id: int


class FeatureDataset:
    """Row-aligned feature matrix, class indices and user ids."""

    def __init__(self, X: np.ndarray, y: np.ndarray, user_ids: Optional[np.ndarray] = None,
                 feature_names: Optional[Sequence[str]] = None):
        X = np.asarray(X, dtype=float)
        if X.ndim == 1:
            X = X.reshape(-1, 1)
        y = np.asarray(y, dtype=np.int64).reshape(-1)
        if X.shape[0] != y.shape[0]:
            raise ValueError(f"{X.shape[0]} feature rows but {y.shape[0]} labels")
        if user_ids is None:
            user_ids = np.ones(y.shape[0], dtype=np.int64)
        if feature_names is None:
            feature_names = FEATURE_NAMES if X.shape[1] == len(FEATURE_NAMES) else \
                [f"F{i}" for i in range(X.shape[1])]
        if len(feature_names) != X.shape[1]:
            raise ValueError("feature_names must match the number of columns")

        self.X = X
        self.y = y
        self.user_ids = np.asarray(user_ids, dtype=np.int64).reshape(-1)
        self.feature_names = list(feature_names)

    def __len__(self) -> int:
        return self.X.shape[0]

    @property
    def n_features(self) -> int:
        return self.X.shape[1]

    def subset(self, indices: Sequence[int]) -> "FeatureDataset":
        idx = np.asarray(indices, dtype=np.int64)
        return FeatureDataset(self.X[idx], self.y[idx], self.user_ids[idx], self.feature_names)

    @classmethod
    def from_vectors(cls, vectors: Sequence[FeatureVector],
                     feature_names: Optional[Sequence[str]] = None) -> "FeatureDataset":
        width = len(feature_names) if feature_names is not None else len(FEATURE_NAMES)
        if not vectors:
            return cls(np.empty((0, width)), np.empty(0, dtype=np.int64),
                       np.empty(0, dtype=np.int64), feature_names)
        return cls(
            np.vstack([v.values for v in vectors]),
            np.array([v.label.index for v in vectors]),
            np.array([v.user_id for v in vectors]),
            feature_names,
        )


def featurize(window: Window, peak_threshold: float = DEFAULT_PEAK_THRESHOLD) -> FeatureVector:
    return FeatureVector(featurize_values(window, peak_threshold), window.activity, window.user_id)


def featurize_all(windows: Sequence[Window],
                  peak_threshold: float = DEFAULT_PEAK_THRESHOLD) -> FeatureDataset:
    """featurize() over windows, row order = window order."""
    return FeatureDataset.from_vectors([featurize(w, peak_threshold) for w in windows])


def _to_frame(dataset: FeatureDataset) -> pd.DataFrame:
    frame = pd.DataFrame(dataset.X, columns=dataset.feature_names)
    frame["user_id"] = dataset.user_ids
    frame["label"] = [Activity.from_index(int(c)).value for c in dataset.y]
    return frame


def features_to_csv(dataset: FeatureDataset) -> str:
    """Canonical CSV text: feature columns, user_id, label; 6 significant digits."""
    buffer = io.StringIO()
    _to_frame(dataset).to_csv(buffer, index=False, float_format=CSV_FLOAT_FORMAT,
                              lineterminator="\n")
    return buffer.getvalue()


def write_features(dataset: FeatureDataset, path: str):
    text = features_to_csv(dataset)
    try:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
    except OSError as e:
        raise IoFailure(f"Cannot write feature CSV {path}: {e}") from e


def read_features(source: Union[str, io.TextIOBase]) -> FeatureDataset:
    """Parse a feature CSV back into a dataset; floats round-trip the written text exactly."""
    try:
        frame = pd.read_csv(source, float_precision="round_trip")
    except FileNotFoundError as e:
        raise IoFailure(f"Feature CSV not found: {source}") from e
    except OSError as e:
        raise IoFailure(f"Cannot read feature CSV {source}: {e}") from e
    except pd.errors.EmptyDataError as e:
        raise MalformedRecord(f"Feature CSV has no header: {source}") from e

    missing = [c for c in META_COLUMNS if c not in frame.columns]
    if missing:
        raise MalformedRecord(f"Feature CSV lacks columns: {', '.join(missing)}")

    feature_columns = [c for c in frame.columns if c not in META_COLUMNS]
    try:
        X = frame[feature_columns].to_numpy(dtype=float)
    except (TypeError, ValueError) as e:
        raise MalformedRecord(f"Non-numeric feature value: {e}") from e
    if not np.all(np.isfinite(X)):
        raise MalformedRecord("Feature CSV contains non-finite values")

    labels = np.array([Activity.parse(str(v)).index for v in frame["label"]], dtype=np.int64)
    user_column = pd.to_numeric(frame["user_id"], errors="coerce")
    if user_column.isna().any() or (user_column < 1).any() or (user_column % 1 != 0).any():
        raise MalformedRecord("user_id must be a positive integer on every row")
    user_ids = user_column.to_numpy(dtype=np.int64)
    return FeatureDataset(X.reshape(len(frame), len(feature_columns)), labels, user_ids,
                          feature_columns)
