"""
Gaussian naive Bayes - closed-form per-class Gaussian fit, scored in log space.
"""
from typing import Any, Dict

import numpy as np

from ingest.records import N_CLASSES
from utils.errors import DegenerateClass

from .base_model import BaseModel, ModelKind, softmax


class GaussianNB(BaseModel):
    kind = ModelKind.GAUSSIAN_NB

    @classmethod
    def default_hyperparameters(cls) -> Dict[str, Any]:
        # classes: explicit class indices to model; None = classes present in the data
        return {"var_smoothing": 1e-9, "classes": None}

    def _fit(self, X: np.ndarray, y: np.ndarray):
        counts = np.bincount(y, minlength=N_CLASSES)
        required = self.hyperparameters.get("classes")
        if required is None:
            modelled = np.flatnonzero(counts)
        else:
            modelled = np.asarray(sorted(int(c) for c in required), dtype=np.int64)
            empty = [int(c) for c in modelled if counts[c] < 1]
            if empty:
                raise DegenerateClass(f"GaussianNB classes without rows: {empty}")

        max_variance = float(X.var(axis=0).max())
        self.epsilon = self.hyperparameters["var_smoothing"] * max_variance
        if self.epsilon <= 0:
            self.epsilon = self.hyperparameters["var_smoothing"]

        d = X.shape[1]
        self.priors = np.zeros(N_CLASSES)
        self.means = np.zeros((N_CLASSES, d))
        self.variances = np.ones((N_CLASSES, d))
        total = counts[modelled].sum()
        for c in modelled:
            rows = X[y == c]
            self.priors[c] = counts[c] / total
            self.means[c] = rows.mean(axis=0)
            self.variances[c] = rows.var(axis=0) + self.epsilon

    def joint_log_likelihood(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        with np.errstate(divide="ignore"):
            log_prior = np.log(self.priors)
        log_norm = -0.5 * np.log(2.0 * np.pi * self.variances).sum(axis=1)
        diff = X[:, None, :] - self.means[None, :, :]
        quad = -0.5 * (diff ** 2 / self.variances[None, :, :]).sum(axis=2)
        return log_prior[None, :] + log_norm[None, :] + quad

    def predict_scores(self, X: np.ndarray) -> np.ndarray:
        return softmax(self.joint_log_likelihood(X))

    def get_params(self) -> Dict[str, Any]:
        return {
            "priors": self.priors.tolist(),
            "means": self.means.tolist(),
            "variances": self.variances.tolist(),
            "epsilon": self.epsilon,
        }

    def set_params(self, params: Dict[str, Any]):
        self.priors = np.asarray(params["priors"], dtype=float)
        self.means = np.asarray(params["means"], dtype=float)
        self.variances = np.asarray(params["variances"], dtype=float)
        self.epsilon = float(params["epsilon"])
        self.n_features = self.means.shape[1]
        self.fitted = True
