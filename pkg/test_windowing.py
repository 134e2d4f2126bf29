"""
Tests for window segmentation and trace statistics.
"""
import numpy as np
import pytest

from conftest import make_window
from ingest import Activity, RawReading
from windowing import Window, dropped_readings, segment, trace_stats


def _stream(n, user_id=1, activity=Activity.WALKING, start=0):
    return [RawReading(user_id, activity, start + i * 50, 0.0, 1.0, 2.0) for i in range(n)]


def test_650_readings_give_three_windows():
    readings = _stream(650)
    windows = segment(readings)
    assert len(windows) == 3
    assert all(len(w) == 200 for w in windows)
    assert dropped_readings(readings) == 50


def test_below_window_size():
    assert segment(_stream(199)) == []


def test_empty_input():
    assert segment([]) == []


def test_groups_in_first_appearance_order():
    readings = _stream(200, user_id=5) + _stream(200, user_id=2) + _stream(200, user_id=5, start=10_000)
    windows = segment(readings)
    assert [w.user_id for w in windows] == [5, 5, 2]


def test_out_of_order_readings_are_sorted():
    readings = list(reversed(_stream(4)))
    windows = segment(readings, window_size=2)
    assert [r.timestamp for r in windows[0].readings] == [0, 50]
    assert [r.timestamp for r in windows[1].readings] == [100, 150]


def test_mixed_groups_never_share_a_window():
    readings = []
    for i in range(400):
        activity = Activity.WALKING if i % 2 else Activity.JOGGING
        readings.append(RawReading(1, activity, i, 0.0, 0.0, 0.0))
    for window in segment(readings):
        assert len({r.activity for r in window.readings}) == 1


def test_window_size_too_small():
    with pytest.raises(ValueError):
        segment(_stream(10), window_size=1)


def test_window_rejects_mixed_users():
    readings = (RawReading(1, Activity.WALKING, 0, 0, 0, 0), RawReading(2, Activity.WALKING, 1, 0, 0, 0))
    with pytest.raises(ValueError):
        Window(1, Activity.WALKING, readings)


def test_window_arrays():
    window = make_window(np.arange(12).reshape(4, 3))
    assert window.acceleration().shape == (4, 3)
    assert window.timestamps().tolist() == [0, 50_000_000, 100_000_000, 150_000_000]


class TestTraceStats:
    def test_two_users(self):
        windows = [make_window(np.zeros((2, 3)), user_id=1) for _ in range(3)]
        windows += [make_window(np.zeros((2, 3)), user_id=2) for _ in range(5)]
        assert trace_stats(windows) == (8, 4.0, 1.0)

    def test_one_user(self):
        windows = [make_window(np.zeros((2, 3)), user_id=9) for _ in range(7)]
        assert trace_stats(windows) == (7, 7.0, 0.0)

    def test_empty(self):
        assert trace_stats([]) == (0, 0.0, 0.0)


def _random_readings(rng):
    readings = []
    for user_id in rng.choice(np.arange(1, 9), size=int(rng.integers(1, 4)), replace=False):
        for index in rng.choice(len(Activity), size=int(rng.integers(1, 4)), replace=False):
            n = int(rng.integers(0, 700))
            timestamps = rng.choice(10 * n + 1, size=n, replace=False)
            readings += [RawReading(int(user_id), Activity.from_index(int(index)), int(t), *rng.normal(0, 5, 3))
                         for t in timestamps]
    return readings


def _windows_by_group(windows):
    grouped = {}
    for w in windows:
        grouped.setdefault((w.user_id, w.activity), []).append(w.readings)
    return grouped


class TestSegmentProperties:
    def test_every_reading_is_windowed_or_dropped(self):
        rng = np.random.default_rng(40)
        for _ in range(50):
            readings = _random_readings(rng)
            rng.shuffle(readings)
            windows = segment(readings)
            assert 200 * len(windows) + dropped_readings(readings) == len(readings)
            for window in windows:
                assert len(window) == 200
                assert len({(r.user_id, r.activity) for r in window.readings}) == 1
                stamps = [r.timestamp for r in window.readings]
                assert stamps == sorted(stamps)

    def test_interleaving_across_groups_does_not_matter(self):
        rng = np.random.default_rng(41)
        for _ in range(30):
            readings = _random_readings(rng)
            grouped_first = sorted(readings, key=lambda r: (r.user_id, r.activity.index))
            interleaved = list(readings)
            rng.shuffle(interleaved)
            # only the interleaving changes; each group keeps its own order
            by_key = {}
            for r in grouped_first:
                by_key.setdefault((r.user_id, r.activity), []).append(r)
            keys = [(r.user_id, r.activity) for r in interleaved]
            cursors = {key: iter(group) for key, group in by_key.items()}
            interleaved = [next(cursors[key]) for key in keys]

            assert _windows_by_group(segment(interleaved)) == _windows_by_group(segment(grouped_first))
