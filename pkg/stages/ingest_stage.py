"""
Ingest Stage - reads raw accelerometer records on the receiving node.
"""
import time
from typing import Any, Dict

from ingest.records import IngestReport, load_raw_path

from .base_stage import BaseStage


class IngestStage(BaseStage):
    """Loads raw readings from a path, or passes through in-memory readings."""

    def __init__(self, config: Dict[str, Any]):
        super().__init__("Ingest", config)

    def process(self, input_data: Dict[str, Any]) -> Dict[str, Any]:
        """
        Args:
            input_data: Dictionary containing one of:
                - source: path of a raw file ('-' = stdin)
                - readings: already-parsed RawReading sequence

        Returns:
            Dictionary with readings, report (IngestReport) and parse_time_s
        """
        started = time.perf_counter()
        if input_data.get("readings") is not None:
            readings = list(input_data["readings"])
            report = IngestReport(accepted=len(readings))
            origin = "memory"
        else:
            readings, report = load_raw_path(input_data["source"])
            origin = input_data["source"]
        parse_time = time.perf_counter() - started

        self.log_action("ingest", {"origin": origin, **report.to_dict(),
                                   "rejected_line_numbers": len(report.rejected_line_numbers)})
        return {"readings": readings, "report": report, "parse_time_s": parse_time}
