"""
Stratified k-fold cross-validation, confusion matrices and timing capture.
"""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence

import numpy as np
from sklearn import metrics
from tqdm import tqdm

from features.dataset import FeatureDataset
from ingest.records import ACTIVITIES, N_CLASSES
from models.registry import ModelSpec, train
from utils.errors import LengthMismatch, TooFewRows

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FoldAssignment:
    fold_of_row: np.ndarray
    k: int

    def test_indices(self, fold: int) -> np.ndarray:
        return np.flatnonzero(self.fold_of_row == fold)

    def train_indices(self, fold: int) -> np.ndarray:
        return np.flatnonzero(self.fold_of_row != fold)


@dataclass
class EvalReport:
    model_kind: str
    per_fold_accuracy: List[float]
    overall_accuracy: float
    confusion: np.ndarray
    train_time_s: float
    predict_time_s: float
    metadata: Dict[str, Any] = field(default_factory=dict)

    def per_class_recall(self) -> Dict[str, float]:
        recalls = {}
        for c, activity in enumerate(ACTIVITIES):
            total = self.confusion[c].sum()
            recalls[activity.value] = float(self.confusion[c, c] / total) if total else 0.0
        return recalls

    def to_dict(self) -> Dict[str, Any]:
        return {
            "model": self.model_kind,
            "overall_accuracy": self.overall_accuracy,
            "per_fold_accuracy": list(self.per_fold_accuracy),
            "per_class_recall": self.per_class_recall(),
            "confusion": self.confusion.tolist(),
            "labels": [a.value for a in ACTIVITIES],
            # wall-clock; excluded from determinism guarantees
            "timing": {"train_time_s": self.train_time_s, "predict_time_s": self.predict_time_s},
            "metadata": dict(self.metadata),
        }

    def to_csv_row(self) -> Dict[str, Any]:
        return {
            "model": self.model_kind,
            "accuracy": self.overall_accuracy,
            "k_folds": self.metadata.get("k"),
            "seed": self.metadata.get("seed"),
            "train_time_s": self.train_time_s,
            "predict_time_s": self.predict_time_s,
        }


def stratified_kfold(data: FeatureDataset, k: int, seed: int) -> FoldAssignment:
    """
    Shuffle each class with the seeded generator, then deal its rows round-robin.
    Dealing continues across classes, so every fold is non-empty once rows >= k.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if len(data) < k:
        raise TooFewRows(f"{len(data)} rows cannot fill {k} folds")

    rng = np.random.default_rng(seed)
    fold_of_row = np.empty(len(data), dtype=np.int64)
    position = 0
    for c in range(N_CLASSES):
        rows = rng.permutation(np.flatnonzero(data.y == c))
        fold_of_row[rows] = (position + np.arange(rows.size)) % k
        position = (position + rows.size) % k
    return FoldAssignment(fold_of_row, k)


def confusion_matrix(truths: Sequence[int], predictions: Sequence[int]) -> np.ndarray:
    """6x6 counts, rows = true class, columns = predicted class."""
    truths = np.asarray(truths, dtype=np.int64)
    predictions = np.asarray(predictions, dtype=np.int64)
    if truths.shape != predictions.shape:
        raise LengthMismatch(f"{truths.size} truths vs {predictions.size} predictions")
    if truths.size == 0:
        return np.zeros((N_CLASSES, N_CLASSES), dtype=np.int64)
    return metrics.confusion_matrix(truths, predictions, labels=range(N_CLASSES)).astype(np.int64)


def _run_fold(data: FeatureDataset, spec: ModelSpec, folds: FoldAssignment, fold: int):
    train_rows = data.subset(folds.train_indices(fold))
    test_idx = folds.test_indices(fold)

    started = time.perf_counter()
    model = train(spec, train_rows)
    train_time = time.perf_counter() - started

    started = time.perf_counter()
    predicted = model.predict_labels(data.X[test_idx]) if test_idx.size else np.empty(0, np.int64)
    predict_time = time.perf_counter() - started

    return confusion_matrix(data.y[test_idx], predicted), train_time, predict_time


def cross_validate(data: FeatureDataset, spec: ModelSpec, k: int = 10, seed: int = 42,
                   threads: int = 1, progress: bool = False) -> EvalReport:
    """
    Train on k-1 folds, predict the held-out fold, for every fold.
    Fold results merge in fold order whatever the thread count.
    """
    folds = stratified_kfold(data, k, seed)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda f: _run_fold(data, spec, folds, f), range(k)))
    else:
        fold_range = tqdm(range(k), desc=spec.kind, leave=False, disable=None if progress else True)
        results = [_run_fold(data, spec, folds, f) for f in fold_range]

    confusion = np.zeros((N_CLASSES, N_CLASSES), dtype=np.int64)
    per_fold = []
    for fold_confusion, _, _ in results:
        confusion += fold_confusion
        total = fold_confusion.sum()
        per_fold.append(float(np.trace(fold_confusion) / total) if total else 0.0)

    total = confusion.sum()
    report = EvalReport(
        model_kind=spec.kind,
        per_fold_accuracy=per_fold,
        overall_accuracy=float(np.trace(confusion) / total) if total else 0.0,
        confusion=confusion,
        train_time_s=sum(r[1] for r in results),
        predict_time_s=sum(r[2] for r in results),
        metadata={"k": k, "seed": seed, "stratified": True,
                  "hyperparameters": dict(spec.hyperparameters)},
    )
    logger.info("%s: accuracy %.4f over %d folds", spec.kind, report.overall_accuracy, k)
    return report
