"""
Tests for raw record parsing, stream loading and synthetic generation.
"""
import io
import math

import pytest

from ingest import (
    Activity,
    RawReading,
    format_reading,
    generate_synthetic,
    load_raw,
    load_raw_path,
    parse_line,
    serialize_raw,
    split_records,
    write_raw,
)
from utils.errors import IoFailure, MalformedRecord


class TestParseLine:
    def test_wisdm_record(self):
        reading = parse_line("33,Jogging,49105962326000,-0.69,12.68,0.50;")
        assert reading == RawReading(33, Activity.JOGGING, 49105962326000, -0.69, 12.68, 0.50)

    def test_without_trailing_semicolon(self):
        assert parse_line("1,Standing,0,0.0,0.0,0.0") == RawReading(1, Activity.STANDING, 0, 0, 0, 0)

    @pytest.mark.parametrize("line", [
        "1,Flying,0,0,0,0;",
        "1,Walking,0,0,0;",
        "x,Walking,0,0,0,0;",
        "0,Walking,0,0,0,0;",
        "1,Walking,-5,0,0,0;",
        "1,Walking,0,nan,0,0;",
        "1,Walking,0,1e308,1e308,1e308;",
        "1,Walking,0,0,0,0;2,Walking,0,0,0,0;",
        "",
    ])
    def test_malformed(self, line):
        with pytest.raises(MalformedRecord):
            parse_line(line)

    def test_extreme_but_finite_axis_is_accepted(self):
        assert parse_line("1,Walking,0,1e308,0,0;").ax == 1e308

    def test_malformed_keeps_line(self):
        with pytest.raises(MalformedRecord) as info:
            parse_line("1,Flying,0,0,0,0;")
        assert info.value.line == "1,Flying,0,0,0,0;"


def test_split_records_drops_empty_chunks():
    assert split_records("1,Walking,0,1,2,3;2,Jogging,5,1,2,3;;\n") == [
        "1,Walking,0,1,2,3", "2,Jogging,5,1,2,3",
    ]


class TestLoadRaw:
    def test_counts_rejections_with_line_numbers(self):
        text = (
            "1,Walking,0,1.0,2.0,3.0;\n"
            "1,Walking,50,1.0,2.0,3.0;\n"
            "1,Flying,100,1.0,2.0,3.0;\n"
            "1,Walking,150,1.0,2.0,3.0;\n"
        )
        readings, report = load_raw(io.StringIO(text))
        assert len(readings) == 3
        assert report.to_dict() == {"accepted": 3, "rejected": 1, "rejected_line_numbers": [3]}

    def test_empty_stream(self):
        readings, report = load_raw(io.BytesIO(b""))
        assert readings == []
        assert (report.accepted, report.rejected, report.rejected_line_numbers) == (0, 0, [])

    def test_several_records_on_one_line(self):
        data = b"1,Walking,0,1,2,3;1,Walking,50,1,2,3;1,Bogus,100,1,2,3;\n"
        readings, report = load_raw(io.BytesIO(data))
        assert [r.timestamp for r in readings] == [0, 50]
        assert report.rejected_line_numbers == [1]

    def test_invalid_utf8_is_rejected_not_fatal(self):
        data = b"1,Walking,0,1,2,3;\n1,Walk\xffing,50,1,2,3;\n"
        readings, report = load_raw(io.BytesIO(data))
        assert len(readings) == 1
        assert report.rejected == 1

    def test_missing_file(self, tmp_path):
        with pytest.raises(IoFailure):
            load_raw_path(str(tmp_path / "nope.txt"))

    def test_directory_is_io_failure(self, tmp_path):
        with pytest.raises(IoFailure):
            load_raw_path(str(tmp_path))


class TestFormatting:
    def test_format_reading(self):
        reading = RawReading(7, Activity.SITTING, 123, 0.5, -9.81, 1e-3)
        assert format_reading(reading) == "7,Sitting,123,0.5,-9.81,0.001;"

    def test_write_then_load(self, tmp_path, synthetic_readings):
        path = tmp_path / "raw.txt"
        with open(path, "w", encoding="utf-8") as f:
            write_raw(synthetic_readings[:500], f)
        readings, report = load_raw_path(str(path))
        assert report.rejected == 0
        assert len(readings) == 500
        for original, loaded in zip(synthetic_readings, readings):
            assert (loaded.user_id, loaded.activity, loaded.timestamp) == \
                (original.user_id, original.activity, original.timestamp)
            assert math.isclose(loaded.ax, original.ax, rel_tol=1e-5, abs_tol=1e-9)

    def test_serialize_raw_one_line_per_reading(self, synthetic_readings):
        text = serialize_raw(synthetic_readings[:10])
        assert text.count("\n") == 10


class TestSynthetic:
    def test_counts(self):
        assert len(generate_synthetic(1, 1, 20.0, seed=7)) == 6 * 200
        assert len(generate_synthetic(2, 5, 20.0, seed=1)) == 2 * 6 * 5 * 200

    def test_deterministic(self):
        assert generate_synthetic(1, 1, 20.0, seed=7) == generate_synthetic(1, 1, 20.0, seed=7)

    def test_seed_changes_values(self):
        assert generate_synthetic(1, 1, 20.0, seed=7) != generate_synthetic(1, 1, 20.0, seed=8)

    def test_order_and_clock(self):
        readings = generate_synthetic(2, 1, 20.0, seed=3)
        assert [r.user_id for r in readings[::1200]] == [1, 2]
        first = readings[:200]
        assert {r.activity for r in first} == {Activity.WALKING}
        assert first[1].timestamp - first[0].timestamp == 50_000_000

    @pytest.mark.parametrize("args", [(0, 1, 20.0), (1, 0, 20.0), (1, 1, 0.0)])
    def test_invalid_arguments(self, args):
        with pytest.raises(ValueError):
            generate_synthetic(*args, seed=0)
