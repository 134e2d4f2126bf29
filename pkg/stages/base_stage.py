"""
Base Stage class for the fogmetry pipeline.
Provides common functionality for all pipeline stage processors.
"""
from abc import ABC, abstractmethod
from datetime import datetime
from typing import Any, Dict, List


class BaseStage(ABC):
    """Abstract base class for all pipeline stages."""

    def __init__(self, name: str, config: Dict[str, Any]):
        """
        Initialize the base stage.

        Args:
            name: Stage name/identifier
            config: Settings the stage reads (window size, seeds, ...)
        """
        self.name = name
        self.config = config
        self.history: List[Dict[str, Any]] = []

    @abstractmethod
    def process(self, input_data: Dict[str, Any]) -> Dict[str, Any]:
        """
        Process input and produce output.

        Args:
            input_data: Output of the previous stage plus run parameters

        Returns:
            Processed output data
        """

    def log_action(self, action: str, details: Dict[str, Any]):
        """Log an action for tracking."""
        self.history.append({
            "timestamp": datetime.now().isoformat(),
            "stage": self.name,
            "action": action,
            "details": details,
        })

    def get_history(self) -> List[Dict[str, Any]]:
        return self.history
