"""
Base Model class for the fogmetry classifiers.
Provides the shared training contract, scoring helpers and action history.
"""
from abc import ABC, abstractmethod
from datetime import datetime
from enum import Enum
from typing import Any, Dict, List

import numpy as np

from ingest.records import N_CLASSES
from utils.errors import EmptyTrainingSet


class ModelKind(str, Enum):
    GAUSSIAN_NB = "GaussianNB"
    LOGISTIC_REGRESSION = "LogisticRegression"
    DECISION_TREE = "DecisionTree"
    MLP = "MLP"


def softmax(logits: np.ndarray) -> np.ndarray:
    """Row-wise softmax; -inf logits get probability 0."""
    shifted = logits - np.max(logits, axis=1, keepdims=True)
    exp = np.exp(shifted)
    return exp / exp.sum(axis=1, keepdims=True)


def one_hot(y: np.ndarray, n_classes: int = N_CLASSES) -> np.ndarray:
    out = np.zeros((y.shape[0], n_classes))
    out[np.arange(y.shape[0]), y] = 1.0
    return out


class Standardizer:
    """z-score statistics fitted on training rows only."""

    def __init__(self, mean: np.ndarray = None, scale: np.ndarray = None):
        self.mean = mean
        self.scale = scale

    def fit(self, X: np.ndarray) -> "Standardizer":
        self.mean = X.mean(axis=0)
        std = X.std(axis=0)
        # constant columns pass through centred
        self.scale = np.where(std > 0, std, 1.0)
        return self

    def transform(self, X: np.ndarray) -> np.ndarray:
        return (X - self.mean) / self.scale

    def to_dict(self) -> Dict[str, List[float]]:
        return {"mean": self.mean.tolist(), "scale": self.scale.tolist()}

    @classmethod
    def from_dict(cls, data: Dict[str, List[float]]) -> "Standardizer":
        return cls(np.asarray(data["mean"], dtype=float), np.asarray(data["scale"], dtype=float))


class BaseModel(ABC):
    """Abstract base class for all classifiers. Immutable once fitted."""

    kind: ModelKind

    def __init__(self, hyperparameters: Dict[str, Any] = None, seed: int = 0):
        self.hyperparameters = {**self.default_hyperparameters(), **(hyperparameters or {})}
        self.seed = seed
        self.n_features = 0
        self.fitted = False
        self.history: List[Dict[str, Any]] = []

    @classmethod
    def default_hyperparameters(cls) -> Dict[str, Any]:
        return {}

    def fit(self, X: np.ndarray, y: np.ndarray) -> "BaseModel":
        X = np.asarray(X, dtype=float)
        y = np.asarray(y, dtype=np.int64)
        if X.shape[0] == 0:
            raise EmptyTrainingSet(f"{self.kind.value} cannot train on zero rows")
        self.n_features = X.shape[1]
        self._fit(X, y)
        self.fitted = True
        self.log_action("fit", {"rows": int(X.shape[0]), "features": int(X.shape[1])})
        return self

    @abstractmethod
    def _fit(self, X: np.ndarray, y: np.ndarray):
        """Learn parameters from training rows."""

    @abstractmethod
    def predict_scores(self, X: np.ndarray) -> np.ndarray:
        """(n, 6) class scores; probabilistic models return distributions."""

    def predict_labels(self, X: np.ndarray) -> np.ndarray:
        # argmax keeps the lowest index on ties
        return np.argmax(self.predict_scores(X), axis=1)

    @abstractmethod
    def get_params(self) -> Dict[str, Any]:
        """JSON-ready learned parameters."""

    @abstractmethod
    def set_params(self, params: Dict[str, Any]):
        """Restore learned parameters produced by get_params()."""

    def log_action(self, action: str, details: Dict[str, Any]):
        """Log an action for tracking."""
        self.history.append({
            "timestamp": datetime.now().isoformat(),
            "model": self.kind.value,
            "action": action,
            "details": details,
        })
