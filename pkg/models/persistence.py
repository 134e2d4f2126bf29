"""
Model persistence - versioned JSON documents holding the kind tag and parameters.

    {"format": "fogmetry-model", "version": 1, "kind": "MLP", "seed": 42,
     "hyperparameters": {...}, "params": {...}, "saved": "<iso time>"}
"""
import json
import os
from datetime import datetime
from typing import Any, Dict

from utils.errors import ConfigError, IoFailure

from .base_model import BaseModel
from .registry import MODEL_REGISTRY

MODEL_FORMAT = "fogmetry-model"
MODEL_FORMAT_VERSION = 1


def model_to_dict(model: BaseModel) -> Dict[str, Any]:
    return {
        "format": MODEL_FORMAT,
        "version": MODEL_FORMAT_VERSION,
        "kind": model.kind.value,
        "seed": model.seed,
        "hyperparameters": model.hyperparameters,
        "params": model.get_params(),
        "saved": datetime.now().isoformat(),
    }


def model_from_dict(document: Dict[str, Any]) -> BaseModel:
    if document.get("format") != MODEL_FORMAT:
        raise ConfigError("Not a fogmetry model document")
    if document.get("version") != MODEL_FORMAT_VERSION:
        raise ConfigError(f"Unsupported model format version: {document.get('version')}")
    kind = document.get("kind")
    if kind not in MODEL_REGISTRY:
        raise ConfigError(f"Unknown model kind in document: {kind!r}")

    model = MODEL_REGISTRY[kind](document.get("hyperparameters", {}), document.get("seed", 0))
    model.set_params(document["params"])
    return model


def save_model(model: BaseModel, path: str):
    """Save a trained model to disk."""
    try:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, 'w') as f:
            json.dump(model_to_dict(model), f, indent=2)
    except OSError as e:
        raise IoFailure(f"Cannot save model to {path}: {e}") from e


def load_model(path: str) -> BaseModel:
    """Load a model saved by save_model()."""
    try:
        with open(path, 'r') as f:
            document = json.load(f)
    except FileNotFoundError as e:
        raise IoFailure(f"Model file not found: {path}") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"Model file is not valid JSON: {path}") from e
    return model_from_dict(document)
