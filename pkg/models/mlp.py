"""
Multilayer perceptron - one sigmoid hidden layer, softmax output,
cross-entropy loss, per-sample SGD with momentum.
"""
import logging
import math
from typing import Any, Dict, Tuple

import numpy as np

from ingest.records import N_CLASSES

from .base_model import BaseModel, ModelKind, Standardizer, one_hot, softmax

logger = logging.getLogger(__name__)


def _sigmoid(a: np.ndarray) -> np.ndarray:
    return 0.5 * (1.0 + np.tanh(0.5 * a))


class MLP(BaseModel):
    kind = ModelKind.MLP

    @classmethod
    def default_hyperparameters(cls) -> Dict[str, Any]:
        # hidden_units None -> ceil((features + classes) / 2)
        return {"learning_rate": 0.3, "momentum": 0.2, "epochs": 500, "hidden_units": None}

    def hidden_units(self, n_features: int) -> int:
        configured = self.hyperparameters.get("hidden_units")
        if configured:
            return int(configured)
        return math.ceil((n_features + N_CLASSES) / 2)

    def _shapes(self, n_features: int):
        h = self.hidden_units(n_features)
        return [(h, n_features), (h,), (N_CLASSES, h), (N_CLASSES,)]

    def _unpack(self, theta: np.ndarray, n_features: int):
        parts, offset = [], 0
        for shape in self._shapes(n_features):
            size = int(np.prod(shape))
            parts.append(theta[offset:offset + size].reshape(shape))
            offset += size
        return parts

    def initial_parameters(self, n_features: int, rng: np.random.Generator) -> np.ndarray:
        size = sum(int(np.prod(s)) for s in self._shapes(n_features))
        return rng.uniform(-0.5, 0.5, size=size)

    def loss_and_gradient(self, theta: np.ndarray, Xs: np.ndarray,
                          Y: np.ndarray) -> Tuple[float, np.ndarray]:
        """Mean cross-entropy over the rows of Xs, and its flat gradient."""
        W1, b1, W2, b2 = self._unpack(theta, Xs.shape[1])
        n = Xs.shape[0]

        H = _sigmoid(Xs @ W1.T + b1)
        logits = H @ W2.T + b2
        shifted = logits - logits.max(axis=1, keepdims=True)
        log_probs = shifted - np.log(np.exp(shifted).sum(axis=1, keepdims=True))
        loss = -np.sum(Y * log_probs) / n

        dZ = (np.exp(log_probs) - Y) / n
        gW2 = dZ.T @ H
        gb2 = dZ.sum(axis=0)
        dA = (dZ @ W2) * H * (1.0 - H)
        gW1 = dA.T @ Xs
        gb1 = dA.sum(axis=0)
        grad = np.concatenate([gW1.ravel(), gb1, gW2.ravel(), gb2])
        return float(loss), grad

    def _fit(self, X: np.ndarray, y: np.ndarray):
        rng = np.random.default_rng(self.seed)
        self.standardizer = Standardizer().fit(X)
        Xs = self.standardizer.transform(X)
        Y = one_hot(y)

        theta = self.initial_parameters(X.shape[1], rng)
        velocity = np.zeros_like(theta)
        rate = self.hyperparameters["learning_rate"]
        momentum = self.hyperparameters["momentum"]
        epochs = int(self.hyperparameters["epochs"])

        for epoch in range(epochs):
            for i in rng.permutation(Xs.shape[0]):
                _, grad = self.loss_and_gradient(theta, Xs[i:i + 1], Y[i:i + 1])
                velocity = momentum * velocity - rate * grad
                theta = theta + velocity
            if logger.isEnabledFor(logging.DEBUG) and (epoch + 1) % 100 == 0:
                logger.debug("MLP epoch %d loss %.6f", epoch + 1,
                             self.loss_and_gradient(theta, Xs, Y)[0])

        self.theta = theta

    def predict_scores(self, X: np.ndarray) -> np.ndarray:
        Xs = self.standardizer.transform(np.asarray(X, dtype=float))
        W1, b1, W2, b2 = self._unpack(self.theta, Xs.shape[1])
        return softmax(_sigmoid(Xs @ W1.T + b1) @ W2.T + b2)

    def get_params(self) -> Dict[str, Any]:
        W1, b1, W2, b2 = self._unpack(self.theta, self.n_features)
        return {
            "hidden_weights": W1.tolist(),
            "hidden_bias": b1.tolist(),
            "output_weights": W2.tolist(),
            "output_bias": b2.tolist(),
            "standardizer": self.standardizer.to_dict(),
        }

    def set_params(self, params: Dict[str, Any]):
        W1 = np.asarray(params["hidden_weights"], dtype=float)
        self.n_features = W1.shape[1]
        self.hyperparameters["hidden_units"] = W1.shape[0]
        self.theta = np.concatenate([
            W1.ravel(),
            np.asarray(params["hidden_bias"], dtype=float),
            np.asarray(params["output_weights"], dtype=float).ravel(),
            np.asarray(params["output_bias"], dtype=float),
        ])
        self.standardizer = Standardizer.from_dict(params["standardizer"])
        self.fitted = True
