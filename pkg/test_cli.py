"""
End-to-end tests for the fogmetry command line.
"""
import io
import json
import os

import pandas as pd
import pytest

import fogmetry
from ingest import load_raw_path
from utils import ConfigManager
from utils.errors import ConfigError


def run(capsys, config_path, *argv):
    code = fogmetry.main(["--config", config_path, *argv])
    out = capsys.readouterr().out
    return code, out


@pytest.fixture
def raw_file(tmp_path, empty_config, capsys):
    path = tmp_path / "raw.txt"
    code, _ = run(capsys, empty_config, "synth", "--users", "2", "--windows-per-activity", "2",
                  "--seed", "5", "--output", str(path))
    assert code == 0
    return path


@pytest.fixture
def feature_file(tmp_path, raw_file, empty_config, capsys):
    path = tmp_path / "features.csv"
    code, _ = run(capsys, empty_config, "featurize", "--input", str(raw_file), "--output", str(path))
    assert code == 0
    return path


class TestSynth:
    def test_line_count(self, tmp_path, empty_config, capsys):
        path = tmp_path / "raw.txt"
        code, _ = run(capsys, empty_config, "synth", "--users", "3", "--windows-per-activity", "4",
                      "--output", str(path))
        assert code == 0
        assert len(path.read_text(encoding="utf-8").splitlines()) == 3 * 6 * 4 * 200

    def test_reingests_without_rejections(self, raw_file):
        readings, report = load_raw_path(str(raw_file))
        assert report.rejected == 0
        assert len(readings) == 2 * 6 * 2 * 200

    def test_byte_identical_for_fixed_seed(self, tmp_path, empty_config, capsys):
        paths = [tmp_path / "a.txt", tmp_path / "b.txt"]
        for path in paths:
            run(capsys, empty_config, "synth", "--seed", "9", "--users", "1", "--output", str(path))
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_seed_from_environment(self, tmp_path, empty_config, capsys, monkeypatch):
        monkeypatch.setenv("FOGMETRY_SEED", "9")
        run(capsys, empty_config, "synth", "--users", "1", "--output", str(tmp_path / "env.txt"))
        monkeypatch.delenv("FOGMETRY_SEED")
        run(capsys, empty_config, "synth", "--users", "1", "--seed", "9", "--output", str(tmp_path / "flag.txt"))
        assert (tmp_path / "env.txt").read_bytes() == (tmp_path / "flag.txt").read_bytes()

    def test_unwritable_output(self, tmp_path, empty_config, capsys):
        code, _ = run(capsys, empty_config, "synth", "--output", str(tmp_path / "no" / "such" / "dir.txt"))
        assert code == 1


class TestIngest:
    def test_valid_file(self, raw_file, empty_config, capsys):
        code, out = run(capsys, empty_config, "ingest", "--input", str(raw_file))
        assert code == 0
        assert json.loads(out) == {"accepted": 4800, "rejected": 0, "rejected_line_numbers": []}

    def test_strict_with_bad_line(self, tmp_path, empty_config, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("1,Walking,0,1,2,3;\n1,Flying,50,1,2,3;\n", encoding="utf-8")
        code, out = run(capsys, empty_config, "ingest", "--input", str(path), "--strict")
        assert code == 2
        assert json.loads(out)["rejected_line_numbers"] == [2]
        code, _ = run(capsys, empty_config, "ingest", "--input", str(path))
        assert code == 0

    def test_missing_file(self, tmp_path, empty_config, capsys):
        code, _ = run(capsys, empty_config, "ingest", "--input", str(tmp_path / "absent.txt"))
        assert code == 1

    def test_input_required(self, empty_config, capsys):
        code, _ = run(capsys, empty_config, "ingest")
        assert code == 1


class TestFeaturize:
    def test_650_reading_file(self, tmp_path, empty_config, capsys):
        raw = tmp_path / "one.txt"
        raw.write_text("".join(f"4,Sitting,{i * 50},0.1,9.8,0.2;\n" for i in range(650)), encoding="utf-8")
        code, out = run(capsys, empty_config, "featurize", "--input", str(raw), "--output", "-")
        assert code == 0
        frame = pd.read_csv(io.StringIO(out))
        assert len(frame) == 3
        assert set(frame["label"]) == {"Sitting"}

    def test_empty_file(self, tmp_path, empty_config, capsys):
        raw = tmp_path / "empty.txt"
        raw.write_text("", encoding="utf-8")
        code, _ = run(capsys, empty_config, "featurize", "--input", str(raw))
        assert code == 3

    def test_writes_one_row_per_window(self, feature_file):
        assert len(pd.read_csv(feature_file)) == 2 * 6 * 2


class TestEvaluate:
    def test_single_model(self, feature_file, empty_config, capsys):
        code, out = run(capsys, empty_config, "evaluate", "--input", str(feature_file),
                        "--models", "gnb", "--k-folds", "4")
        assert code == 0
        frame = pd.read_csv(io.StringIO(out))
        assert frame["model"].tolist() == ["GaussianNB"]
        assert 0.0 <= frame["accuracy"][0] <= 1.0

    def test_four_models_json(self, feature_file, empty_config, capsys):
        code, out = run(capsys, empty_config, "evaluate", "--input", str(feature_file),
                        "--models", "gnb,logreg,tree,mlp", "--k-folds", "4", "--format", "json")
        assert code == 0
        document = json.loads(out)
        assert [r["model"] for r in document] == ["GaussianNB", "LogisticRegression", "DecisionTree", "MLP"]
        for report in document:
            assert len(report["confusion"]) == 6
            assert len(report["per_fold_accuracy"]) == 4

    def test_same_seed_same_accuracy(self, feature_file, empty_config, capsys):
        args = ("evaluate", "--input", str(feature_file), "--models", "tree,gnb", "--k-folds", "4", "--seed", "3")
        _, first = run(capsys, empty_config, *args)
        _, second = run(capsys, empty_config, *args)
        assert pd.read_csv(io.StringIO(first))["accuracy"].tolist() == \
            pd.read_csv(io.StringIO(second))["accuracy"].tolist()

    def test_save_models(self, feature_file, tmp_path, empty_config, capsys):
        directory = tmp_path / "saved"
        code, _ = run(capsys, empty_config, "evaluate", "--input", str(feature_file), "--models", "tree",
                      "--k-folds", "4", "--save-models", str(directory))
        assert code == 0
        assert json.loads((directory / "DecisionTree.json").read_text())["kind"] == "DecisionTree"

    def test_too_few_rows_is_training_failure(self, feature_file, empty_config, capsys):
        code, _ = run(capsys, empty_config, "evaluate", "--input", str(feature_file), "--k-folds", "50",
                      "--models", "gnb")
        assert code == 4

    def test_unknown_model(self, feature_file, empty_config, capsys):
        code, _ = run(capsys, empty_config, "evaluate", "--input", str(feature_file), "--models", "svm")
        assert code == 1

    def test_non_positive_flag(self, feature_file, empty_config, capsys):
        code, _ = run(capsys, empty_config, "evaluate", "--input", str(feature_file), "--k-folds", "0")
        assert code == 1


class TestBenchmark:
    base = ("benchmark", "--synthetic", "--users", "2", "--windows-per-activity", "2",
            "--models", "gnb,tree", "--k-folds", "4")

    def test_cost_rows(self, empty_config, capsys):
        code, out = run(capsys, empty_config, *self.base)
        assert code == 0
        frame = pd.read_csv(io.StringIO(out))
        assert list(frame.columns) == fogmetry.COST_COLUMNS
        assert len(frame) == 3 * 2
        assert (frame.loc[frame["plan"] == "FogOnly", "bytes_tx"] == 0).all()

    def test_doubling_uplink_halves_transmission(self, empty_config, capsys):
        _, slow = run(capsys, empty_config, *self.base)
        _, fast = run(capsys, empty_config, *self.base, "--uplink-bps", "2000000")
        slow_tx = pd.read_csv(io.StringIO(slow))["t_tx_s"]
        fast_tx = pd.read_csv(io.StringIO(fast))["t_tx_s"]
        assert (fast_tx * 2).tolist() == pytest.approx(slow_tx.tolist())

    def test_json_report(self, empty_config, capsys):
        code, out = run(capsys, empty_config, *self.base, "--format", "json")
        assert code == 0
        document = json.loads(out)
        assert len(document["evaluation"]) == 2
        assert len(document["costs"]) == 6
        assert document["data_reduction"]["feature_bytes"] < document["data_reduction"]["raw_bytes"]

    def test_raw_file_input(self, raw_file, empty_config, capsys):
        code, out = run(capsys, empty_config, "benchmark", "--input", str(raw_file),
                        "--models", "gnb", "--k-folds", "4")
        assert code == 0
        assert len(pd.read_csv(io.StringIO(out))) == 3


class TestConfig:
    def test_defaults(self, empty_config):
        config = ConfigManager(empty_config)
        assert config.get("pipeline", "window_size") == 200
        assert config.get("evaluation", "k_folds") == 10
        assert config.get("deployment", "uplink_bps") == 1_000_000

    def test_yaml_overrides_defaults(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("evaluation:\n  k_folds: 5\n", encoding="utf-8")
        config = ConfigManager(str(path))
        assert config.get("evaluation", "k_folds") == 5
        assert config.get("evaluation", "seed") == 42

    def test_seed_env_var(self, empty_config, monkeypatch):
        monkeypatch.setenv("FOGMETRY_SEED", "77")
        assert ConfigManager(empty_config).get("evaluation", "seed") == 77

    def test_bad_seed_env_var(self, empty_config, monkeypatch):
        monkeypatch.setenv("FOGMETRY_SEED", "abc")
        with pytest.raises(ConfigError):
            ConfigManager(empty_config)

    def test_bad_yaml(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("evaluation: [unclosed\n", encoding="utf-8")
        with pytest.raises(ConfigError):
            ConfigManager(str(path))

    def test_cli_reports_bad_config(self, tmp_path, capsys):
        path = tmp_path / "config.yaml"
        path.write_text("- just\n- a list\n", encoding="utf-8")
        code, _ = run(capsys, str(path), "synth", "--output", str(tmp_path / "x.txt"))
        assert code == 1

    def test_shipped_config_matches_defaults(self, empty_config, monkeypatch):
        monkeypatch.delenv("FOGMETRY_SEED", raising=False)
        shipped = os.path.join(os.path.dirname(os.path.abspath(fogmetry.__file__)), "config", "config.yaml")
        assert ConfigManager(shipped).config == ConfigManager(empty_config).config

    def test_every_config_key_reaches_the_cli(self, tmp_path, monkeypatch):
        monkeypatch.delenv("FOGMETRY_SEED", raising=False)
        path = tmp_path / "config.yaml"
        path.write_text(
            "pipeline:\n  window_size: 100\n  peak_threshold: 0.2\n"
            "evaluation:\n  k_folds: 4\n  seed: 9\n  threads: 3\n"
            "synthetic:\n  users: 3\n  windows_per_activity: 2\n  sample_rate_hz: 10.0\n"
            "output:\n  format: json\n",
            encoding="utf-8",
        )
        args = fogmetry.build_parser().parse_args(["--config", str(path), "synth"])
        config = fogmetry.CliConfig.from_sources(args)
        assert (config.window_size, config.peak_threshold) == (100, 0.2)
        assert (config.k_folds, config.seed, config.threads) == (4, 9, 3)
        assert (config.users, config.windows_per_activity, config.sample_rate_hz) == (3, 2, 10.0)
        assert config.output_format == "json"
        manager = ConfigManager(str(path))
        assert set(manager.get("pipeline")) == {"window_size", "peak_threshold"}
        assert set(manager.get("evaluation")) == {"k_folds", "seed", "threads"}
