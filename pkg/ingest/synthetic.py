"""
Seeded synthetic accelerometer data - a desk-scale stand-in for WISDM.

Each activity gets its own sinusoid (frequency and per-axis amplitude) plus
Gaussian noise; static activities add a constant gravity offset on one axis.
"""
from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from .records import ACTIVITIES, Activity, RawReading

GRAVITY = 9.81
SYNTHETIC_WINDOW = 200
# Base clock for the first sample of every stream, in ns.
BASE_TIMESTAMP_NS = 1_000_000_000_000


@dataclass(frozen=True)
class ActivityWaveform:
    frequency_hz: float
    amplitude: Tuple[float, float, float]
    phase: Tuple[float, float, float]
    noise_std: float
    gravity_axis: int = -1


WAVEFORMS: Dict[Activity, ActivityWaveform] = {
    Activity.WALKING: ActivityWaveform(2.0, (3.0, 4.0, 2.0), (0.0, 0.6, 1.2), 0.3),
    Activity.JOGGING: ActivityWaveform(2.8, (7.0, 9.0, 5.0), (0.3, 0.9, 1.5), 0.5),
    Activity.UPSTAIRS: ActivityWaveform(1.4, (2.0, 2.5, 1.2), (0.5, 0.0, 2.0), 0.3),
    Activity.DOWNSTAIRS: ActivityWaveform(1.7, (4.5, 5.5, 3.5), (1.0, 0.2, 0.4), 0.4),
    Activity.SITTING: ActivityWaveform(0.25, (0.2, 0.2, 0.2), (0.0, 1.0, 2.0), 0.05, gravity_axis=2),
    Activity.STANDING: ActivityWaveform(0.25, (0.2, 0.2, 0.2), (2.0, 1.0, 0.0), 0.05, gravity_axis=1),
}


def generate_synthetic(n_users: int, windows_per_activity: int,
                       sample_rate_hz: float, seed: int) -> List[RawReading]:
    """
    Generate n_users * 6 * windows_per_activity * 200 readings.

    Output is grouped by user, then activity in declaration order, then time.
    Identical arguments give identical output.
    """
    if n_users < 1 or windows_per_activity < 1:
        raise ValueError("n_users and windows_per_activity must be >= 1")
    if not sample_rate_hz > 0:
        raise ValueError("sample_rate_hz must be > 0")

    rng = np.random.default_rng(seed)
    n_samples = windows_per_activity * SYNTHETIC_WINDOW
    step_ns = int(round(1e9 / sample_rate_hz))
    t_seconds = np.arange(n_samples) * (step_ns / 1e9)
    timestamps = BASE_TIMESTAMP_NS + np.arange(n_samples, dtype=np.int64) * step_ns

    readings: List[RawReading] = []
    for user_id in range(1, n_users + 1):
        # Mild per-user variation in gait intensity.
        user_gain = rng.uniform(0.9, 1.1)
        for activity in ACTIVITIES:
            wave = WAVEFORMS[activity]
            signal = np.empty((n_samples, 3))
            for axis in range(3):
                signal[:, axis] = user_gain * wave.amplitude[axis] * np.sin(
                    2.0 * np.pi * wave.frequency_hz * t_seconds + wave.phase[axis]
                )
            signal += rng.normal(0.0, wave.noise_std, size=signal.shape)
            if wave.gravity_axis >= 0:
                signal[:, wave.gravity_axis] += GRAVITY

            for i in range(n_samples):
                readings.append(RawReading(
                    user_id, activity, int(timestamps[i]),
                    float(signal[i, 0]), float(signal[i, 1]), float(signal[i, 2]),
                ))
    return readings
