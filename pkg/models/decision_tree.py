"""
Decision tree - greedy top-down binary splits on numeric thresholds by
information gain, depth and leaf-size capped, no pruning.
"""
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ingest.records import N_CLASSES

from .base_model import BaseModel, ModelKind

LEAF = -1
GAIN_TOLERANCE = 1e-12


def _entropy(counts: np.ndarray) -> np.ndarray:
    """Entropy in bits of each row of class counts."""
    counts = np.atleast_2d(counts).astype(float)
    totals = counts.sum(axis=1, keepdims=True)
    with np.errstate(divide="ignore", invalid="ignore"):
        p = np.where(totals > 0, counts / totals, 0.0)
        terms = np.where(p > 0, p * np.log2(p), 0.0)
    return -terms.sum(axis=1)


class DecisionTree(BaseModel):
    kind = ModelKind.DECISION_TREE

    @classmethod
    def default_hyperparameters(cls) -> Dict[str, Any]:
        # max_depth None disables the depth cap
        return {"max_depth": 15, "min_leaf": 2}

    def _best_split(self, X: np.ndarray, y: np.ndarray,
                    parent_counts: np.ndarray) -> Tuple[Optional[int], float, float]:
        """(feature, threshold, gain) of the best split; ties keep the lowest feature then threshold."""
        min_leaf = int(self.hyperparameters["min_leaf"])
        n = y.shape[0]
        parent_entropy = _entropy(parent_counts)[0]
        best_feature, best_threshold, best_gain = None, 0.0, 0.0

        positions = np.arange(n - 1)
        left_sizes = positions + 1
        size_ok = (left_sizes >= min_leaf) & (n - left_sizes >= min_leaf)
        if not size_ok.any():
            return None, 0.0, 0.0

        indicator = np.eye(N_CLASSES)[y]
        for feature in range(X.shape[1]):
            order = np.argsort(X[:, feature], kind="stable")
            values = X[order, feature]
            distinct = values[:-1] < values[1:]
            valid = size_ok & distinct
            if not valid.any():
                continue

            left_counts = np.cumsum(indicator[order], axis=0)[:-1]
            right_counts = parent_counts[None, :] - left_counts
            weighted = (left_sizes * _entropy(left_counts)
                        + (n - left_sizes) * _entropy(right_counts)) / n
            gains = np.where(valid, parent_entropy - weighted, -np.inf)
            i = int(np.argmax(gains))
            if gains[i] > best_gain + GAIN_TOLERANCE:
                threshold = (values[i] + values[i + 1]) / 2.0
                if threshold >= values[i + 1]:
                    threshold = values[i]
                best_feature, best_threshold, best_gain = feature, float(threshold), float(gains[i])
        return best_feature, best_threshold, best_gain

    def _fit(self, X: np.ndarray, y: np.ndarray):
        max_depth = self.hyperparameters.get("max_depth")
        self.features: List[int] = []
        self.thresholds: List[float] = []
        self.left: List[int] = []
        self.right: List[int] = []
        self.counts: List[List[int]] = []

        def new_node(counts: np.ndarray) -> int:
            self.features.append(LEAF)
            self.thresholds.append(0.0)
            self.left.append(LEAF)
            self.right.append(LEAF)
            self.counts.append(counts.astype(int).tolist())
            return len(self.features) - 1

        root_counts = np.bincount(y, minlength=N_CLASSES)
        stack = [(new_node(root_counts), np.arange(y.shape[0]), 0)]
        self.depth = 0
        while stack:
            node, rows, depth = stack.pop()
            self.depth = max(self.depth, depth)
            counts = np.asarray(self.counts[node])
            if np.count_nonzero(counts) <= 1:
                continue
            if max_depth is not None and depth >= max_depth:
                continue
            feature, threshold, _ = self._best_split(X[rows], y[rows], counts)
            if feature is None:
                continue

            goes_left = X[rows, feature] <= threshold
            left_rows, right_rows = rows[goes_left], rows[~goes_left]
            self.features[node] = feature
            self.thresholds[node] = threshold
            self.left[node] = new_node(np.bincount(y[left_rows], minlength=N_CLASSES))
            self.right[node] = new_node(np.bincount(y[right_rows], minlength=N_CLASSES))
            stack.append((self.right[node], right_rows, depth + 1))
            stack.append((self.left[node], left_rows, depth + 1))

        self.log_action("grow", {"nodes": len(self.features), "depth": self.depth})

    def _leaf_of(self, x: np.ndarray) -> int:
        node = 0
        while self.features[node] != LEAF:
            if x[self.features[node]] <= self.thresholds[node]:
                node = self.left[node]
            else:
                node = self.right[node]
        return node

    def predict_scores(self, X: np.ndarray) -> np.ndarray:
        X = np.atleast_2d(np.asarray(X, dtype=float))
        counts = np.asarray(self.counts, dtype=float)
        leaves = [self._leaf_of(x) for x in X]
        leaf_counts = counts[leaves]
        return leaf_counts / leaf_counts.sum(axis=1, keepdims=True)

    def leaves(self) -> List[int]:
        return [i for i, f in enumerate(self.features) if f == LEAF]

    def get_params(self) -> Dict[str, Any]:
        return {
            "features": list(self.features),
            "thresholds": list(self.thresholds),
            "left": list(self.left),
            "right": list(self.right),
            "counts": [list(c) for c in self.counts],
            "depth": self.depth,
            "n_features": self.n_features,
        }

    def set_params(self, params: Dict[str, Any]):
        self.features = [int(f) for f in params["features"]]
        self.thresholds = [float(t) for t in params["thresholds"]]
        self.left = [int(i) for i in params["left"]]
        self.right = [int(i) for i in params["right"]]
        self.counts = [[int(c) for c in row] for row in params["counts"]]
        self.depth = int(params["depth"])
        self.n_features = int(params["n_features"])
        self.fitted = True
