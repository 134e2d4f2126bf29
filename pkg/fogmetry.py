"""
fogmetry - hybrid fog/cloud IoT analytics pipeline.
Command-line entry point: ingest, featurize, evaluate, benchmark and synth.

Exit codes: 0 success, 1 I/O or configuration, 2 strict validation,
3 empty pipeline, 4 training failure.
"""
import argparse
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from deployment import COST_COLUMNS, default_plans, measure_payload
from evaluation import cross_validate
from features import featurize_all, features_to_csv, read_features, write_features
from ingest import generate_synthetic, load_raw_path, write_raw
from models import MODEL_ALIASES, ModelSpec, resolve_kind, save_model, train
from utils import console
from utils.config_manager import ConfigManager
from utils.errors import (
    ConfigError,
    DegenerateClass,
    EmptyPipeline,
    EmptyTrainingSet,
    FogmetryError,
    IoFailure,
    MalformedRecord,
    TooFewRows,
    UnsupportedKind,
)
from windowing import segment
from workflows import PipelineCoordinator, to_csv, to_json, write_text

EXIT_OK = 0
EXIT_IO = 1
EXIT_STRICT = 2
EXIT_EMPTY = 3
EXIT_TRAINING = 4

# kind name -> CLI alias, for hyperparameter lookup in config.yaml
KIND_TO_ALIAS = {kind: alias for alias, kind in MODEL_ALIASES.items()}


@dataclass
class CliConfig:
    subcommand: str
    input: Optional[str] = None
    output: Optional[str] = None
    window_size: int = 200
    peak_threshold: float = 0.1
    k_folds: int = 10
    seed: int = 42
    threads: int = 1
    uplink_bps: float = 1_000_000.0
    overhead: float = 1.0
    fog_speed: float = 10.0
    cloud_speed: float = 1.0
    fog_archive: bool = False
    models: List[str] = field(default_factory=lambda: ["gnb", "logreg", "tree", "mlp"])
    output_format: str = "csv"
    strict: bool = False
    synthetic: bool = False
    users: int = 2
    windows_per_activity: int = 5
    sample_rate_hz: float = 20.0
    save_models_dir: Optional[str] = None
    verbose: bool = False
    hyperparameters: Dict[str, Dict[str, Any]] = field(default_factory=dict)

    def validate(self):
        positive = {
            "window_size": self.window_size,
            "peak_threshold": self.peak_threshold,
            "k_folds": self.k_folds,
            "threads": self.threads,
            "uplink_bps": self.uplink_bps,
            "overhead": self.overhead,
            "fog_speed": self.fog_speed,
            "cloud_speed": self.cloud_speed,
            "users": self.users,
            "windows_per_activity": self.windows_per_activity,
            "sample_rate_hz": self.sample_rate_hz,
        }
        for name, value in positive.items():
            if not value > 0:
                raise ConfigError(f"{name} must be positive, got {value}")
        if self.window_size < 2:
            raise ConfigError("window_size must be >= 2")
        if self.k_folds < 2:
            raise ConfigError("k_folds must be >= 2")
        if self.output_format not in ("csv", "json"):
            raise ConfigError(f"output format must be csv or json, got {self.output_format!r}")
        if not self.models:
            raise ConfigError("at least one model is required")
        for name in self.models:
            resolve_kind(name)

    def stage_settings(self) -> Dict[str, Any]:
        return {
            "window_size": self.window_size,
            "peak_threshold": self.peak_threshold,
            "k_folds": self.k_folds,
            "seed": self.seed,
            "threads": self.threads,
            "progress": True,
        }

    def deployment_settings(self) -> Dict[str, Any]:
        return {
            "uplink_bps": self.uplink_bps,
            "overhead": self.overhead,
            "fog": {"name": "fog-gateway", "speed_factor": self.fog_speed},
            "cloud": {"name": "cloud", "speed_factor": self.cloud_speed},
            "fog_archive": self.fog_archive,
        }

    def model_specs(self) -> List[ModelSpec]:
        specs = []
        for name in self.models:
            kind = resolve_kind(name)
            params = dict(self.hyperparameters.get(KIND_TO_ALIAS.get(kind, kind), {}))
            specs.append(ModelSpec(kind, params, self.seed))
        return specs

    @classmethod
    def from_sources(cls, args: argparse.Namespace) -> "CliConfig":
        """Defaults < config.yaml < FOGMETRY_SEED < command-line flags."""
        manager = ConfigManager(args.config)
        pipeline, evaluation = manager.get("pipeline"), manager.get("evaluation")
        deployment, synthetic = manager.get("deployment"), manager.get("synthetic")
        models = manager.get("models")

        config = cls(
            subcommand=args.command,
            window_size=int(pipeline["window_size"]),
            peak_threshold=float(pipeline["peak_threshold"]),
            k_folds=int(evaluation["k_folds"]),
            seed=int(evaluation["seed"]),
            threads=int(evaluation["threads"]),
            uplink_bps=float(deployment["uplink_bps"]),
            overhead=float(deployment["overhead"]),
            fog_speed=float(deployment["fog"]["speed_factor"]),
            cloud_speed=float(deployment["cloud"]["speed_factor"]),
            fog_archive=bool(deployment["fog_archive"]),
            models=list(models["enabled"]),
            output_format=str(manager.get("output", "format", "csv")),
            users=int(synthetic["users"]),
            windows_per_activity=int(synthetic["windows_per_activity"]),
            sample_rate_hz=float(synthetic["sample_rate_hz"]),
            hyperparameters=dict(models["hyperparameters"]),
        )

        overrides = {
            "input": "input", "output": "output", "window_size": "window_size",
            "peak_threshold": "peak_threshold", "k_folds": "k_folds", "seed": "seed",
            "threads": "threads", "uplink_bps": "uplink_bps", "overhead": "overhead",
            "fog_speed": "fog_speed", "cloud_speed": "cloud_speed", "format": "output_format",
            "users": "users", "windows_per_activity": "windows_per_activity",
            "sample_rate": "sample_rate_hz", "save_models": "save_models_dir",
        }
        for arg_name, attr in overrides.items():
            value = getattr(args, arg_name, None)
            if value is not None:
                setattr(config, attr, value)
        if getattr(args, "models", None):
            config.models = [m for m in args.models.split(",") if m.strip()]
        config.strict = bool(getattr(args, "strict", False))
        config.synthetic = bool(getattr(args, "synthetic", False))
        config.fog_archive = config.fog_archive or bool(getattr(args, "fog_archive", False))
        config.verbose = bool(args.verbose)
        config.validate()
        return config


def _require_input(config: CliConfig) -> str:
    if not config.input:
        raise ConfigError(f"{config.subcommand}: --input is required")
    return config.input


def _write_report(document: Any, rows: List[Dict[str, Any]], config: CliConfig,
                  columns: Optional[List[str]] = None):
    text = to_json(document) if config.output_format == "json" else to_csv(rows, columns)
    write_text(text, config.output or "-")


def cmd_ingest(config: CliConfig) -> int:
    """Validate a raw file and print the ingest report as JSON."""
    _, report = load_raw_path(_require_input(config))
    write_text(to_json(report.to_dict()) + "\n", config.output or "-")
    if report.rejected:
        console.warn(f"{report.rejected} malformed records")
        if config.strict:
            return EXIT_STRICT
    console.ok(f"{report.accepted} readings accepted")
    return EXIT_OK


def cmd_featurize(config: CliConfig) -> int:
    """Raw file in, canonical feature CSV out."""
    readings, report = load_raw_path(_require_input(config))
    windows = segment(readings, config.window_size)
    if not windows:
        raise EmptyPipeline("no complete windows in the input")
    dataset = featurize_all(windows, config.peak_threshold)

    output = config.output or "-"
    if output == "-":
        write_text(features_to_csv(dataset))
    else:
        write_features(dataset, output)

    console.ok(f"{len(windows)} windows from {report.accepted} readings")
    console.ok(f"raw bytes {measure_payload(readings)}, feature bytes {measure_payload(dataset)}")
    return EXIT_OK


def cmd_evaluate(config: CliConfig) -> int:
    """Cross-validate every requested model on a feature CSV."""
    source = _require_input(config)
    dataset = read_features(sys.stdin if source == "-" else source)
    reports = []
    for spec in config.model_specs():
        console.step(f"🧠 Cross-validating {spec.kind} ({config.k_folds} folds)")
        report = cross_validate(dataset, spec, k=config.k_folds, seed=config.seed,
                                threads=config.threads, progress=True)
        console.ok(f"accuracy {report.overall_accuracy:.4f}")
        reports.append(report)

        if config.save_models_dir:
            path = os.path.join(config.save_models_dir, f"{spec.kind}.json")
            save_model(train(spec, dataset), path)
            console.ok(f"model saved to {path}")

    _write_report([r.to_dict() for r in reports], [r.to_csv_row() for r in reports], config)
    return EXIT_OK


def cmd_benchmark(config: CliConfig) -> int:
    """Full pipeline on the host plus the three-architecture cost comparison."""
    if config.synthetic:
        raw_source = generate_synthetic(config.users, config.windows_per_activity,
                                        config.sample_rate_hz, config.seed)
    else:
        raw_source = _require_input(config)

    coordinator = PipelineCoordinator(config.stage_settings())
    coordinator.register_default_stages()
    report = coordinator.benchmark_pipeline(raw_source, config.model_specs(),
                                            default_plans(config.deployment_settings()))
    _write_report(report.to_dict(), report.cost_rows(), config, COST_COLUMNS)
    return EXIT_OK


def cmd_synth(config: CliConfig) -> int:
    """Write a seeded synthetic raw file in the WISDM record grammar."""
    readings = generate_synthetic(config.users, config.windows_per_activity,
                                  config.sample_rate_hz, config.seed)
    output = config.output or "-"
    if output == "-":
        write_raw(readings, sys.stdout)
    else:
        try:
            with open(output, 'w', encoding='utf-8', newline='') as f:
                write_raw(readings, f)
        except OSError as e:
            raise IoFailure(f"Cannot write {output}: {e}") from e
    console.ok(f"{len(readings)} synthetic readings written")
    return EXIT_OK


COMMANDS = {
    "ingest": cmd_ingest,
    "featurize": cmd_featurize,
    "evaluate": cmd_evaluate,
    "benchmark": cmd_benchmark,
    "synth": cmd_synth,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fogmetry",
        description="Hybrid fog/cloud IoT analytics: feature fusion, classification and "
                    "deployment cost comparison.",
    )
    parser.add_argument("--config", default="config/config.yaml", help="YAML configuration file")
    parser.add_argument("--verbose", action="store_true", help="debug logging")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="input path ('-' = stdin)")
    common.add_argument("--output", help="output path ('-' = stdout)")
    common.add_argument("--format", choices=["csv", "json"], help="report format")
    common.add_argument("--seed", type=int, help="random seed (env FOGMETRY_SEED)")
    common.add_argument("--threads", type=int, help="maximum concurrent folds")

    pipeline = argparse.ArgumentParser(add_help=False)
    pipeline.add_argument("--window-size", dest="window_size", type=int)
    pipeline.add_argument("--peak-threshold", dest="peak_threshold", type=float)

    modelling = argparse.ArgumentParser(add_help=False)
    modelling.add_argument("--k-folds", dest="k_folds", type=int)
    modelling.add_argument("--models", help="comma list of gnb,logreg,tree,mlp")

    synthetic = argparse.ArgumentParser(add_help=False)
    synthetic.add_argument("--users", type=int)
    synthetic.add_argument("--windows-per-activity", dest="windows_per_activity", type=int)
    synthetic.add_argument("--sample-rate", dest="sample_rate", type=float)

    sub = parser.add_subparsers(dest="command", required=True)
    ingest = sub.add_parser("ingest", parents=[common], help="validate a raw file")
    ingest.add_argument("--strict", action="store_true", help="exit 2 on any rejected record")
    sub.add_parser("featurize", parents=[common, pipeline], help="raw file -> feature CSV")
    evaluate = sub.add_parser("evaluate", parents=[common, modelling],
                              help="cross-validate models on a feature CSV")
    evaluate.add_argument("--save-models", dest="save_models", help="directory for trained models")
    benchmark = sub.add_parser("benchmark", parents=[common, pipeline, modelling, synthetic],
                               help="pipeline + fog/cloud/hybrid cost report")
    benchmark.add_argument("--synthetic", action="store_true", help="use generated data")
    benchmark.add_argument("--uplink-bps", dest="uplink_bps", type=float)
    benchmark.add_argument("--overhead", type=float)
    benchmark.add_argument("--fog-speed", dest="fog_speed", type=float)
    benchmark.add_argument("--cloud-speed", dest="cloud_speed", type=float)
    benchmark.add_argument("--fog-archive", dest="fog_archive", action="store_true",
                           help="FogOnly uploads feature rows for storage")
    sub.add_parser("synth", parents=[common, synthetic], help="write a synthetic raw file")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the application."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        config = CliConfig.from_sources(args)
        return COMMANDS[config.subcommand](config)
    except (IoFailure, ConfigError, MalformedRecord) as e:
        console.error(str(e))
        return EXIT_IO
    except EmptyPipeline as e:
        console.error(str(e))
        return EXIT_EMPTY
    except (EmptyTrainingSet, DegenerateClass, TooFewRows, UnsupportedKind) as e:
        console.error(f"Training failed - {e}")
        return EXIT_TRAINING
    except FogmetryError as e:
        console.error(str(e))
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
