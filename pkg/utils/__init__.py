"""fogmetry utils - configuration, console output and error types."""
from .config_manager import ConfigManager
from .errors import (
    ConfigError,
    DegenerateClass,
    EmptyPipeline,
    EmptyTrainingSet,
    FogmetryError,
    IoFailure,
    LengthMismatch,
    MalformedRecord,
    TooFewRows,
    UnsupportedKind,
)

__all__ = [
    'ConfigManager',
    'ConfigError',
    'DegenerateClass',
    'EmptyPipeline',
    'EmptyTrainingSet',
    'FogmetryError',
    'IoFailure',
    'LengthMismatch',
    'MalformedRecord',
    'TooFewRows',
    'UnsupportedKind',
]
