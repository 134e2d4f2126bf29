"""
Shared pytest fixtures for the fogmetry test suite.
"""
import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from features import FeatureDataset, featurize_all
from ingest import Activity, RawReading, generate_synthetic
from windowing import Window, segment

WISDM_ENV_VAR = "FOGMETRY_WISDM"
DEFAULT_WISDM_PATH = os.path.join("data", "WISDM_ar_v1.1_raw.txt")
STEP_NS = 50_000_000  # 20 Hz


def make_window(samples, user_id=1, activity=Activity.WALKING, step_ns=STEP_NS, start_ns=0):
    """Build a Window from an (n, 3) array of accelerations."""
    samples = np.asarray(samples, dtype=float)
    readings = tuple(
        RawReading(user_id, activity, start_ns + i * step_ns, *map(float, row))
        for i, row in enumerate(samples)
    )
    return Window(user_id, activity, readings)


def clustered_dataset(n_per_class=20, n_features=4, n_classes=6, spread=0.3, seed=0):
    """Well separated Gaussian blobs, one per class."""
    rng = np.random.default_rng(seed)
    centers = rng.uniform(-10.0, 10.0, size=(n_classes, n_features))
    X = np.vstack([centers[c] + rng.normal(0.0, spread, (n_per_class, n_features))
                   for c in range(n_classes)])
    y = np.repeat(np.arange(n_classes), n_per_class)
    return FeatureDataset(X, y)


@pytest.fixture(scope="session")
def synthetic_readings():
    return generate_synthetic(2, 5, 20.0, seed=1)


@pytest.fixture(scope="session")
def synthetic_features(synthetic_readings):
    return featurize_all(segment(synthetic_readings))


@pytest.fixture(scope="session")
def wisdm_path():
    path = os.environ.get(WISDM_ENV_VAR, DEFAULT_WISDM_PATH)
    if not os.path.exists(path):
        pytest.skip(f"WISDM raw file not available at {path}")
    return path


@pytest.fixture
def empty_config(tmp_path):
    """A config path that does not exist, so built-in defaults apply."""
    return str(tmp_path / "missing.yaml")
