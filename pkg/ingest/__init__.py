"""fogmetry ingest - raw accelerometer parsing, validation and synthetic data."""
from .records import (
    ACTIVITIES,
    N_CLASSES,
    Activity,
    IngestReport,
    RawReading,
    format_reading,
    load_raw,
    load_raw_path,
    parse_line,
    serialize_raw,
    split_records,
    write_raw,
)
from .synthetic import generate_synthetic

__all__ = [
    'ACTIVITIES',
    'N_CLASSES',
    'Activity',
    'IngestReport',
    'RawReading',
    'format_reading',
    'generate_synthetic',
    'load_raw',
    'load_raw_path',
    'parse_line',
    'serialize_raw',
    'split_records',
    'write_raw',
]
