"""fogmetry models - from-scratch classifiers over feature vectors."""
from .base_model import BaseModel, ModelKind, Standardizer
from .decision_tree import DecisionTree
from .logistic_regression import LogisticRegression
from .mlp import MLP
from .naive_bayes import GaussianNB
from .persistence import load_model, model_from_dict, model_to_dict, save_model
from .registry import (
    MODEL_ALIASES,
    MODEL_REGISTRY,
    ModelSpec,
    Prediction,
    TrainedModel,
    available_models,
    gradient_check,
    predict,
    register_model,
    resolve_kind,
    train,
)

__all__ = [
    'BaseModel',
    'DecisionTree',
    'GaussianNB',
    'LogisticRegression',
    'MLP',
    'MODEL_ALIASES',
    'MODEL_REGISTRY',
    'ModelKind',
    'ModelSpec',
    'Prediction',
    'Standardizer',
    'TrainedModel',
    'available_models',
    'gradient_check',
    'load_model',
    'model_from_dict',
    'model_to_dict',
    'predict',
    'register_model',
    'resolve_kind',
    'save_model',
    'train',
]
