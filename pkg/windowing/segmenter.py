"""
Window segmentation - cuts per-user, per-activity streams into fixed-size chunks.
"""
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ingest.records import Activity, RawReading

DEFAULT_WINDOW_SIZE = 200


@dataclass(frozen=True)
class Window:
    """Consecutive readings of one user performing one activity."""

    user_id: int
    activity: Activity
    readings: Tuple[RawReading, ...]

    def __post_init__(self):
        if len(self.readings) < 2:
            raise ValueError("a window needs at least 2 readings")
        previous = -1
        for r in self.readings:
            if r.user_id != self.user_id or r.activity != self.activity:
                raise ValueError("all readings in a window must share user and activity")
            if r.timestamp < previous:
                raise ValueError("window timestamps must be non-decreasing")
            previous = r.timestamp

    def __len__(self) -> int:
        return len(self.readings)

    def acceleration(self) -> np.ndarray:
        """(n, 3) array of ax, ay, az."""
        return np.array([(r.ax, r.ay, r.az) for r in self.readings], dtype=float)

    def timestamps(self) -> np.ndarray:
        return np.array([r.timestamp for r in self.readings], dtype=np.int64)


def _group(readings: Sequence[RawReading]) -> Dict[Tuple[int, Activity], List[RawReading]]:
    # dict keeps first-appearance order
    groups: Dict[Tuple[int, Activity], List[RawReading]] = {}
    for r in readings:
        groups.setdefault((r.user_id, r.activity), []).append(r)
    return groups


def segment(readings: Sequence[RawReading], window_size: int = DEFAULT_WINDOW_SIZE) -> List[Window]:
    """
    Group by (user, activity), stable-sort each group by timestamp and cut it into
    non-overlapping windows. Trailing partial chunks are dropped.
    """
    if window_size < 2:
        raise ValueError(f"window_size must be >= 2, got {window_size}")

    windows: List[Window] = []
    for (user_id, activity), group in _group(readings).items():
        ordered = sorted(group, key=lambda r: r.timestamp)
        for start in range(0, len(ordered) - window_size + 1, window_size):
            windows.append(Window(user_id, activity, tuple(ordered[start:start + window_size])))
    return windows


def dropped_readings(readings: Sequence[RawReading], window_size: int = DEFAULT_WINDOW_SIZE) -> int:
    """Number of readings segment() discards as trailing partial chunks."""
    return sum(len(group) % window_size for group in _group(readings).values())


def trace_stats(windows: Sequence[Window]) -> Tuple[int, float, float]:
    """(window count, mean windows per user, population std across users)."""
    if not windows:
        return 0, 0.0, 0.0
    per_user = np.array(list(Counter(w.user_id for w in windows).values()), dtype=float)
    return len(windows), float(per_user.mean()), float(per_user.std())
