"""
Raw accelerometer records - parsing, validation and canonical formatting.

On-disk grammar (WISDM v1.1): ``user,activity,timestamp,x,y,z;`` with the
trailing semicolon optional. Several records may share one physical line,
separated by semicolons.
"""
import io
import logging
import math
import sys
from dataclasses import dataclass, field
from enum import Enum
from typing import BinaryIO, Iterable, Iterator, List, TextIO, Tuple, Union

from utils.errors import IoFailure, MalformedRecord

logger = logging.getLogger(__name__)


class Activity(str, Enum):
    """The six activities; declaration order is the class index."""

    WALKING = "Walking"
    JOGGING = "Jogging"
    UPSTAIRS = "Upstairs"
    DOWNSTAIRS = "Downstairs"
    SITTING = "Sitting"
    STANDING = "Standing"

    @property
    def index(self) -> int:
        return ACTIVITIES.index(self)

    @classmethod
    def parse(cls, label: str) -> "Activity":
        try:
            return cls(label.strip())
        except ValueError:
            raise MalformedRecord(f"Unknown activity label: {label!r}") from None

    @classmethod
    def from_index(cls, index: int) -> "Activity":
        return ACTIVITIES[index]


ACTIVITIES: Tuple[Activity, ...] = tuple(Activity)
N_CLASSES = len(ACTIVITIES)


@dataclass(frozen=True)
class RawReading:
    """One timestamped tri-axial sample (m/s^2, timestamp in ns)."""

    user_id: int
    activity: Activity
    timestamp: int
    ax: float
    ay: float
    az: float

    def __post_init__(self):
        if self.user_id < 1:
            raise MalformedRecord(f"user_id must be positive, got {self.user_id}")
        if self.timestamp < 0:
            raise MalformedRecord(f"timestamp must be >= 0, got {self.timestamp}")
        for axis in (self.ax, self.ay, self.az):
            if not math.isfinite(axis):
                raise MalformedRecord(f"non-finite acceleration value: {axis}")
        if not math.isfinite(math.hypot(self.ax, self.ay, self.az)):
            raise MalformedRecord("acceleration magnitude exceeds the float range")


@dataclass
class IngestReport:
    accepted: int = 0
    rejected: int = 0
    rejected_line_numbers: List[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "accepted": self.accepted,
            "rejected": self.rejected,
            "rejected_line_numbers": list(self.rejected_line_numbers),
        }


def _parse_fields(fields: List[str], line: str) -> RawReading:
    if len(fields) != 6:
        raise MalformedRecord(f"expected 6 fields, got {len(fields)}", line)
    user_text, activity_text, ts_text, x_text, y_text, z_text = (f.strip() for f in fields)
    try:
        user_id = int(user_text)
        timestamp = int(ts_text)
        ax, ay, az = float(x_text), float(y_text), float(z_text)
    except ValueError as e:
        raise MalformedRecord(f"unparseable number: {e}", line) from None
    try:
        activity = Activity.parse(activity_text)
        return RawReading(user_id, activity, timestamp, ax, ay, az)
    except MalformedRecord as e:
        raise MalformedRecord(str(e), line) from None


def parse_line(line: str) -> RawReading:
    """Parse exactly one record; a trailing ';' and surrounding whitespace are tolerated."""
    text = line.strip()
    while text.endswith(";"):
        text = text[:-1].rstrip()
    if not text:
        raise MalformedRecord("empty record", line)
    if ";" in text:
        raise MalformedRecord("more than one record on the line", line)
    return _parse_fields(text.split(","), line)


def split_records(line: str) -> List[str]:
    """Split one physical line into its non-empty ';'-separated records."""
    return [chunk.strip() for chunk in line.split(";") if chunk.strip()]


def format_reading(reading: RawReading) -> str:
    """Canonical record text, floats with 6 significant digits."""
    return (
        f"{reading.user_id},{reading.activity.value},{reading.timestamp},"
        f"{reading.ax:.6g},{reading.ay:.6g},{reading.az:.6g};"
    )


def _iter_text_lines(source: Union[BinaryIO, TextIO, Iterable]) -> Iterator[str]:
    for raw in source:
        if isinstance(raw, bytes):
            yield raw.decode("utf-8", errors="replace")
        else:
            yield raw


def load_raw(source: Union[BinaryIO, TextIO, Iterable]) -> Tuple[List[RawReading], IngestReport]:
    """
    Read every record from a line-oriented stream.

    Malformed records are skipped and counted. Each rejected record adds its
    1-based physical line number to the report, so a line holding two bad
    records is listed twice.
    """
    readings: List[RawReading] = []
    report = IngestReport()

    try:
        for line_number, line in enumerate(_iter_text_lines(source), start=1):
            for record in split_records(line):
                try:
                    readings.append(_parse_fields(record.split(","), record))
                    report.accepted += 1
                except MalformedRecord as e:
                    report.rejected += 1
                    report.rejected_line_numbers.append(line_number)
                    logger.debug("Skipping line %d: %s", line_number, e)
    except (OSError, io.UnsupportedOperation) as e:
        raise IoFailure(f"Cannot read raw source: {e}") from e

    if report.rejected:
        logger.warning("Skipped %d malformed records", report.rejected)
    return readings, report


def load_raw_path(path: str) -> Tuple[List[RawReading], IngestReport]:
    """load_raw over a file path; '-' reads standard input."""
    if path == "-":
        return load_raw(sys.stdin.buffer)
    try:
        with open(path, "rb") as f:
            return load_raw(f)
    except FileNotFoundError as e:
        raise IoFailure(f"Raw file not found: {path}") from e
    except IsADirectoryError as e:
        raise IoFailure(f"Raw path is a directory: {path}") from e
    except PermissionError as e:
        raise IoFailure(f"Permission denied: {path}") from e


def serialize_raw(readings: Iterable[RawReading]) -> str:
    """Whole-dataset canonical text, one record per line."""
    return "".join(format_reading(r) + "\n" for r in readings)


def write_raw(readings: Iterable[RawReading], stream: TextIO):
    try:
        for reading in readings:
            stream.write(format_reading(reading) + "\n")
    except OSError as e:
        raise IoFailure(f"Cannot write raw records: {e}") from e
