"""
Multinomial logistic regression - softmax on standardized features,
full-batch gradient descent with L2 on the non-bias weights.
"""
from typing import Any, Dict, Tuple

import numpy as np

from ingest.records import N_CLASSES

from .base_model import BaseModel, ModelKind, Standardizer, one_hot, softmax


def _with_bias(Xs: np.ndarray) -> np.ndarray:
    return np.hstack([np.ones((Xs.shape[0], 1)), Xs])


class LogisticRegression(BaseModel):
    kind = ModelKind.LOGISTIC_REGRESSION

    @classmethod
    def default_hyperparameters(cls) -> Dict[str, Any]:
        return {"learning_rate": 0.1, "iterations": 500, "l2": 1e-4}

    def parameter_shape(self, n_features: int) -> Tuple[int, int]:
        return N_CLASSES, n_features + 1

    def loss_and_gradient(self, theta: np.ndarray, Xs: np.ndarray,
                          Y: np.ndarray) -> Tuple[float, np.ndarray]:
        """Mean cross-entropy + L2 penalty, and its gradient; bias is column 0."""
        W = theta.reshape(self.parameter_shape(Xs.shape[1]))
        Xb = _with_bias(Xs)
        logits = Xb @ W.T
        shifted = logits - logits.max(axis=1, keepdims=True)
        log_probs = shifted - np.log(np.exp(shifted).sum(axis=1, keepdims=True))
        l2 = self.hyperparameters["l2"]
        n = Xs.shape[0]

        loss = -np.sum(Y * log_probs) / n + 0.5 * l2 * np.sum(W[:, 1:] ** 2)
        grad = (np.exp(log_probs) - Y).T @ Xb / n
        grad[:, 1:] += l2 * W[:, 1:]
        return float(loss), grad.reshape(-1)

    def _fit(self, X: np.ndarray, y: np.ndarray):
        self.standardizer = Standardizer().fit(X)
        Xs = self.standardizer.transform(X)
        Y = one_hot(y)
        theta = np.zeros(int(np.prod(self.parameter_shape(X.shape[1]))))
        rate = self.hyperparameters["learning_rate"]

        self.loss_history = []
        for _ in range(int(self.hyperparameters["iterations"])):
            loss, grad = self.loss_and_gradient(theta, Xs, Y)
            self.loss_history.append(loss)
            theta = theta - rate * grad
        self.loss_history.append(self.loss_and_gradient(theta, Xs, Y)[0])
        self.weights = theta.reshape(self.parameter_shape(X.shape[1]))

    def predict_scores(self, X: np.ndarray) -> np.ndarray:
        Xs = self.standardizer.transform(np.asarray(X, dtype=float))
        return softmax(_with_bias(Xs) @ self.weights.T)

    def get_params(self) -> Dict[str, Any]:
        return {
            "weights": self.weights.tolist(),
            "standardizer": self.standardizer.to_dict(),
            "loss_history": list(self.loss_history),
        }

    def set_params(self, params: Dict[str, Any]):
        self.weights = np.asarray(params["weights"], dtype=float)
        self.standardizer = Standardizer.from_dict(params["standardizer"])
        self.loss_history = list(params.get("loss_history", []))
        self.n_features = self.weights.shape[1] - 1
        self.fitted = True
