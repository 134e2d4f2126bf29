"""fogmetry windowing - fixed-size segmentation of reading streams."""
from .segmenter import DEFAULT_WINDOW_SIZE, Window, dropped_readings, segment, trace_stats

__all__ = ['DEFAULT_WINDOW_SIZE', 'Window', 'dropped_readings', 'segment', 'trace_stats']
