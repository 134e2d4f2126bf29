"""
Window feature extraction - fuses one window into the 43-value vector.

Layout: 3 means, 3 stds, 3 average absolute differences, 1 average resultant,
3 times-between-peaks (ms), 3 x 10 binned distributions.

Every statistic is computed on values divided by a power of two no smaller than
the largest magnitude and multiplied back afterwards. The division is exact, so
ordinary windows give the same bits as the direct formulas, and windows near the
float range stay finite.
"""
from typing import List, Sequence, Tuple

import numpy as np

from windowing.segmenter import Window

AXES = ("X", "Y", "Z")
N_BINS = 10
DEFAULT_PEAK_THRESHOLD = 0.1
NS_PER_MS = 1e6

FEATURE_NAMES: List[str] = (
    [f"{a}AVG" for a in AXES]
    + [f"{a}STD" for a in AXES]
    + [f"{a}AAD" for a in AXES]
    + ["RESULTANT"]
    + [f"{a}PEAK" for a in AXES]
    + [f"{a}BIN{k}" for a in AXES for k in range(N_BINS)]
)
N_FEATURES = len(FEATURE_NAMES)


def _unit_scaled(samples) -> Tuple[np.ndarray, float]:
    """(values / scale, scale) with scale a power of two and |values / scale| < 2."""
    values = np.asarray(samples, dtype=float)
    peak = float(np.max(np.abs(values))) if values.size else 0.0
    if peak == 0.0:
        return values, 1.0
    _, exponent = np.frexp(peak)
    scale = float(np.ldexp(1.0, int(exponent) - 1))
    return values / scale, scale


def axis_mean(samples: Sequence[float]) -> float:
    values, scale = _unit_scaled(samples)
    return float(np.mean(values)) * scale


def axis_std(samples: Sequence[float]) -> float:
    """Population standard deviation (divisor N)."""
    values, scale = _unit_scaled(samples)
    return float(np.std(values)) * scale


def axis_avg_abs_diff(samples: Sequence[float]) -> float:
    values, scale = _unit_scaled(samples)
    return float(np.mean(np.abs(values - values.mean()))) * scale


def avg_resultant(window: Window) -> float:
    acc, scale = _unit_scaled(window.acceleration())
    return float(np.mean(np.hypot(np.hypot(acc[:, 0], acc[:, 1]), acc[:, 2]))) * scale


def time_between_peaks(samples: Sequence[float], timestamps: Sequence[int],
                       threshold: float = DEFAULT_PEAK_THRESHOLD) -> float:
    """
    Mean gap in ms between successive qualified peaks, or 0 with fewer than two.

    Peaks are strict interior local maxima within the top `threshold` fraction
    of the window's dynamic range.
    """
    values, _ = _unit_scaled(samples)
    times = np.asarray(timestamps, dtype=np.int64)
    if values.size < 3:
        return 0.0

    interior = values[1:-1]
    is_peak = (interior > values[:-2]) & (interior > values[2:])
    top, bottom = values.max(), values.min()
    qualifies = interior >= top - threshold * (top - bottom)
    peak_index = np.flatnonzero(is_peak & qualifies) + 1
    if peak_index.size < 2:
        return 0.0
    return float(np.mean(np.diff(times[peak_index])) / NS_PER_MS)


def binned_distribution(samples: Sequence[float], n_bins: int = N_BINS) -> np.ndarray:
    """
    Fraction of samples in each of n_bins equal-width bins over [min, max].
    A sample on an inner edge belongs to the bin above it; the maximum belongs
    to the last bin.
    """
    values, _ = _unit_scaled(samples)
    lo, hi = values.min(), values.max()
    if hi == lo:
        fractions = np.zeros(n_bins)
        fractions[0] = 1.0
        return fractions
    counts, _ = np.histogram(values, bins=n_bins, range=(lo, hi))
    return counts / values.size


def featurize_values(window: Window, peak_threshold: float = DEFAULT_PEAK_THRESHOLD) -> np.ndarray:
    """The 43 feature values of a window, canonical order."""
    acc = window.acceleration()
    ts = window.timestamps()
    columns = [acc[:, axis] for axis in range(3)]

    values: List[float] = []
    values += [axis_mean(c) for c in columns]
    values += [axis_std(c) for c in columns]
    values += [axis_avg_abs_diff(c) for c in columns]
    values.append(avg_resultant(window))
    values += [time_between_peaks(c, ts, peak_threshold) for c in columns]
    out = np.concatenate([np.asarray(values), *(binned_distribution(c) for c in columns)])
    return out
