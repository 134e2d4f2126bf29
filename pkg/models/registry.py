"""
Model registry - specs, training, prediction and gradient verification.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple, Type, Union

import numpy as np

from features.dataset import FeatureDataset, FeatureVector
from ingest.records import Activity
from utils.errors import ConfigError, EmptyTrainingSet, UnsupportedKind

from .base_model import BaseModel, ModelKind, Standardizer, one_hot
from .decision_tree import DecisionTree
from .logistic_regression import LogisticRegression
from .mlp import MLP
from .naive_bayes import GaussianNB

logger = logging.getLogger(__name__)

TrainedModel = BaseModel

MODEL_REGISTRY: Dict[str, Type[BaseModel]] = {}

# CLI short names
MODEL_ALIASES: Dict[str, str] = {
    "gnb": ModelKind.GAUSSIAN_NB.value,
    "logreg": ModelKind.LOGISTIC_REGRESSION.value,
    "tree": ModelKind.DECISION_TREE.value,
    "mlp": ModelKind.MLP.value,
}

GRADIENT_CHECK_FLOOR = 1e-4


def register_model(kind: str, model_class: Type[BaseModel]):
    """Register a classifier under its kind name."""
    MODEL_REGISTRY[kind] = model_class


for _model_class in (GaussianNB, LogisticRegression, DecisionTree, MLP):
    register_model(_model_class.kind.value, _model_class)


def available_models() -> List[str]:
    return list(MODEL_REGISTRY)


def resolve_kind(name: Union[str, ModelKind]) -> str:
    """Kind name for a ModelKind, a registered kind name or a CLI alias."""
    if isinstance(name, ModelKind):
        return name.value
    key = name.strip()
    if key in MODEL_REGISTRY:
        return key
    if key.lower() in MODEL_ALIASES:
        return MODEL_ALIASES[key.lower()]
    raise ConfigError(f"Unknown model {name!r}; choose from {', '.join(MODEL_ALIASES)}")


@dataclass
class ModelSpec:
    kind: Union[ModelKind, str]
    hyperparameters: Dict[str, Any] = field(default_factory=dict)
    seed: int = 42

    def __post_init__(self):
        self.kind = resolve_kind(self.kind)
        self.validate()

    @property
    def name(self) -> str:
        return self.kind

    def validate(self):
        for key, value in self.hyperparameters.items():
            if value is None or isinstance(value, (bool, list, tuple)):
                continue
            if isinstance(value, (int, float)) and not value > 0:
                raise ConfigError(f"{self.kind} hyperparameter {key} must be > 0, got {value}")

    def build(self) -> BaseModel:
        return MODEL_REGISTRY[self.kind](self.hyperparameters, self.seed)


@dataclass(frozen=True)
class Prediction:
    label: Activity
    class_scores: Tuple[float, ...]


def train(spec: ModelSpec, data: FeatureDataset) -> TrainedModel:
    """Fit a fresh model; deterministic given (spec, data)."""
    if len(data) == 0:
        raise EmptyTrainingSet(f"{spec.kind}: training set is empty")
    logger.debug("Training %s on %d rows", spec.kind, len(data))
    return spec.build().fit(data.X, data.y)


def predict(model: TrainedModel, x: Union[FeatureVector, np.ndarray]) -> Prediction:
    values = x.values if isinstance(x, FeatureVector) else np.asarray(x, dtype=float)
    scores = model.predict_scores(values.reshape(1, -1))[0]
    return Prediction(Activity.from_index(int(np.argmax(scores))), tuple(float(s) for s in scores))


def gradient_check(spec: ModelSpec, data: FeatureDataset, epsilon: float = 1e-5) -> float:
    """
    Max relative error between analytic loss gradients and central finite
    differences at a seeded random parameter point.

    Relative error per parameter is |a - n| / max(|a| + |n|, GRADIENT_CHECK_FLOOR).
    """
    model = spec.build()
    if not hasattr(model, "loss_and_gradient"):
        raise UnsupportedKind(f"{spec.kind} has no differentiable loss")
    if len(data) == 0:
        raise EmptyTrainingSet("gradient check needs at least one row")

    rng = np.random.default_rng(spec.seed)
    Xs = Standardizer().fit(data.X).transform(data.X)
    Y = one_hot(data.y)
    if isinstance(model, MLP):
        theta = model.initial_parameters(Xs.shape[1], rng)
    else:
        theta = rng.normal(0.0, 0.1, size=int(np.prod(model.parameter_shape(Xs.shape[1]))))

    _, analytic = model.loss_and_gradient(theta, Xs, Y)
    numeric = np.empty_like(theta)
    for i in range(theta.size):
        bumped = theta.copy()
        bumped[i] += epsilon
        loss_plus, _ = model.loss_and_gradient(bumped, Xs, Y)
        bumped[i] -= 2.0 * epsilon
        loss_minus, _ = model.loss_and_gradient(bumped, Xs, Y)
        numeric[i] = (loss_plus - loss_minus) / (2.0 * epsilon)

    scale = np.maximum(np.abs(analytic) + np.abs(numeric), GRADIENT_CHECK_FLOOR)
    return float(np.max(np.abs(analytic - numeric) / scale))
