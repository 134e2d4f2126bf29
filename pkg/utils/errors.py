"""
Error types shared by every fogmetry module.
The CLI maps these onto process exit codes; library code only raises them.
"""


class FogmetryError(Exception):
    """Base class for all pipeline errors."""


class MalformedRecord(FogmetryError, ValueError):
    """A raw accelerometer record could not be parsed or failed validation."""

    def __init__(self, message: str, line: str = ""):
        super().__init__(message)
        self.line = line


class IoFailure(FogmetryError, OSError):
    """An input or output stream could not be read or written."""


class ConfigError(FogmetryError, ValueError):
    """Invalid configuration value."""


class EmptyPipeline(FogmetryError):
    """The pipeline produced nothing to work on (e.g. zero windows)."""


class EmptyTrainingSet(FogmetryError, ValueError):
    """A model was asked to train on zero rows."""


class DegenerateClass(FogmetryError, ValueError):
    """A class required by the model has no training rows."""


class UnsupportedKind(FogmetryError, ValueError):
    """The requested operation does not apply to this model kind."""


class TooFewRows(FogmetryError, ValueError):
    """Fewer rows than cross-validation folds."""


class LengthMismatch(FogmetryError, ValueError):
    """Paired sequences differ in length."""
