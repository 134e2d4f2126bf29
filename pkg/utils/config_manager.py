"""
Config Manager - Loads pipeline configuration for fogmetry.
Merges config/config.yaml over built-in defaults and applies environment overrides.
"""
import copy
import logging
import os
from typing import Dict, Any, Optional

import yaml

from .errors import ConfigError

logger = logging.getLogger(__name__)

SEED_ENV_VAR = "FOGMETRY_SEED"


def _deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class ConfigManager:
    """Owns the merged configuration dictionary."""

    def __init__(self, config_path: str = "config/config.yaml"):
        self.config_path = config_path
        self.config = self._load_config()
        self._apply_env_overrides()

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration from YAML, falling back to defaults."""
        defaults = self._get_default_config()
        if not os.path.exists(self.config_path):
            logger.info("Config file not found: %s, using defaults", self.config_path)
            return defaults

        with open(self.config_path, 'r', encoding='utf-8') as f:
            try:
                loaded = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ConfigError(f"Cannot parse {self.config_path}: {e}") from e

        if not isinstance(loaded, dict):
            raise ConfigError(f"{self.config_path} must contain a mapping")
        return _deep_merge(defaults, loaded)

    def _get_default_config(self) -> Dict[str, Any]:
        """Get default configuration."""
        return {
            "pipeline": {
                "window_size": 200,
                "peak_threshold": 0.1,
            },
            "evaluation": {
                "k_folds": 10,
                "seed": 42,
                "threads": 1,
            },
            "models": {
                "enabled": ["gnb", "logreg", "tree", "mlp"],
                "hyperparameters": {
                    "gnb": {"var_smoothing": 1e-9},
                    "logreg": {"learning_rate": 0.1, "iterations": 500, "l2": 1e-4},
                    "tree": {"max_depth": 15, "min_leaf": 2},
                    "mlp": {"learning_rate": 0.3, "momentum": 0.2, "epochs": 500},
                },
            },
            "deployment": {
                "uplink_bps": 1_000_000.0,
                "overhead": 1.0,
                "fog": {"name": "fog-gateway", "speed_factor": 10.0},
                "cloud": {"name": "cloud", "speed_factor": 1.0},
                "fog_archive": False,
            },
            "synthetic": {
                "users": 2,
                "windows_per_activity": 5,
                "sample_rate_hz": 20.0,
            },
            "output": {
                "format": "csv",
            },
        }

    def _apply_env_overrides(self):
        raw_seed = os.environ.get(SEED_ENV_VAR)
        if raw_seed is None or raw_seed.strip() == "":
            return
        try:
            self.config["evaluation"]["seed"] = int(raw_seed)
        except ValueError as e:
            raise ConfigError(f"{SEED_ENV_VAR} must be an integer, got {raw_seed!r}") from e

    def get(self, section: str, key: Optional[str] = None, default: Any = None) -> Any:
        """Look up a whole section, or one key inside it."""
        block = self.config.get(section, {})
        if key is None:
            return block
        return block.get(key, default)
