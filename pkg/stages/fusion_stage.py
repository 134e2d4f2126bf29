"""
Fusion Stage - the fog node's data-in/feature-out step.
Segments readings into windows, fuses each window into a feature vector and
serializes the feature rows for upload.
"""
import io
import time
from typing import Any, Dict

from features.dataset import featurize_all, features_to_csv, read_features
from windowing.segmenter import dropped_readings, segment, trace_stats

from .base_stage import BaseStage


class FusionStage(BaseStage):
    """Turns raw readings into the uploaded feature CSV."""

    def __init__(self, config: Dict[str, Any]):
        super().__init__("Fusion", config)

    def process(self, input_data: Dict[str, Any]) -> Dict[str, Any]:
        """
        Args:
            input_data: Dictionary containing:
                - readings: RawReading sequence

        Returns:
            Dictionary with windows, the dataset as received by the cloud
            (parsed back from the CSV text), feature_csv, transform_time_s,
            dropped and trace statistics
        """
        readings = input_data["readings"]
        window_size = int(self.config.get("window_size", 200))
        peak_threshold = float(self.config.get("peak_threshold", 0.1))

        started = time.perf_counter()
        windows = segment(readings, window_size)
        dataset = featurize_all(windows, peak_threshold)
        feature_csv = features_to_csv(dataset)
        transform_time = time.perf_counter() - started

        received = read_features(io.StringIO(feature_csv))
        count, mean_per_user, std_per_user = trace_stats(windows)

        self.log_action("fuse", {
            "windows": count,
            "window_size": window_size,
            "peak_threshold": peak_threshold,
            "feature_bytes": len(feature_csv.encode("utf-8")),
        })
        return {
            "windows": windows,
            "dataset": received,
            "feature_csv": feature_csv,
            "transform_time_s": transform_time,
            "dropped": dropped_readings(readings, window_size),
            "trace_stats": {"count": count, "mean_per_user": mean_per_user,
                            "std_per_user": std_per_user},
        }
