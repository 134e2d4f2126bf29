"""
Deployment cost simulator - bytes moved and end-to-end time per architecture.

Phase times are measured once on the benchmark host and scaled by the speed
factor of whichever device runs the phase; transmission is a pure bandwidth model.
"""
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Union

from evaluation.cross_validation import EvalReport
from features.dataset import FeatureDataset, features_to_csv
from ingest.records import RawReading, format_reading

from .profiles import DeploymentPlan, DeviceProfile, LinkProfile, PlanKind

COST_COLUMNS = ["plan", "model", "accuracy", "bytes_tx", "t_transform_s", "t_tx_s", "t_ml_s", "t_total_s"]


@dataclass(frozen=True)
class HostTimings:
    """Wall-clock seconds measured on the benchmark host."""

    t_transform_s: float
    t_ml_s: float


@dataclass(frozen=True)
class Payloads:
    raw_bytes: int
    feature_bytes: int


@dataclass(frozen=True)
class CostReport:
    plan: PlanKind
    bytes_tx: int
    t_transform_s: float
    t_tx_s: float
    t_ml_s: float
    t_total_s: float
    model: str = ""
    accuracy: Optional[float] = None

    def to_row(self) -> Dict[str, Any]:
        return {
            "plan": self.plan.value,
            "model": self.model,
            "accuracy": self.accuracy,
            "bytes_tx": self.bytes_tx,
            "t_transform_s": self.t_transform_s,
            "t_tx_s": self.t_tx_s,
            "t_ml_s": self.t_ml_s,
            "t_total_s": self.t_total_s,
        }


def measure_payload(data: Union[FeatureDataset, Sequence[RawReading]]) -> int:
    """Exact byte length of the canonical serialization (feature CSV or raw records)."""
    if isinstance(data, FeatureDataset):
        return len(features_to_csv(data).encode("utf-8"))
    return sum(len(format_reading(r).encode("utf-8")) + 1 for r in data)


def transmission_time(n_bytes: int, link: LinkProfile) -> float:
    if n_bytes < 0:
        raise ValueError("byte count must be >= 0")
    return n_bytes * 8.0 * link.overhead / link.uplink_bps


def simulate(plan: DeploymentPlan, timings: HostTimings, payloads: Payloads,
             model: str = "", accuracy: Optional[float] = None) -> CostReport:
    if min(timings.t_transform_s, timings.t_ml_s, payloads.raw_bytes, payloads.feature_bytes) < 0:
        raise ValueError("timings and payloads must be non-negative")

    if plan.kind == PlanKind.FOG_ONLY:
        t_transform = plan.fog.scale(timings.t_transform_s)
        t_ml = plan.fog.scale(timings.t_ml_s)
        bytes_tx = payloads.feature_bytes if plan.fog_archive else 0
    elif plan.kind == PlanKind.CLOUD_ONLY:
        t_transform = plan.cloud.scale(timings.t_transform_s)
        t_ml = plan.cloud.scale(timings.t_ml_s)
        bytes_tx = payloads.raw_bytes
    else:
        t_transform = plan.fog.scale(timings.t_transform_s)
        t_ml = plan.cloud.scale(timings.t_ml_s)
        bytes_tx = payloads.feature_bytes

    t_tx = transmission_time(bytes_tx, plan.link)
    return CostReport(
        plan=plan.kind,
        bytes_tx=int(bytes_tx),
        t_transform_s=t_transform,
        t_tx_s=t_tx,
        t_ml_s=t_ml,
        t_total_s=t_transform + t_tx + t_ml,
        model=model,
        accuracy=accuracy,
    )


def compare_devices(reports: Sequence[EvalReport], fog: DeviceProfile,
                    cloud: DeviceProfile) -> List[Dict[str, Any]]:
    """Analytics time per model on the fog gateway versus in the cloud."""
    rows = []
    for report in reports:
        host = report.train_time_s + report.predict_time_s
        rows.append({
            "model": report.model_kind,
            "host_ml_s": host,
            "fog_ml_s": fog.scale(host),
            "cloud_ml_s": cloud.scale(host),
            "fog_over_cloud": fog.speed_factor / cloud.speed_factor,
        })
    return rows


def reduction_summary(raw_rows: int, feature_rows: int,
                      raw_bytes: int, feature_bytes: int) -> Dict[str, Any]:
    """How much fusing windows into features shrinks the upload."""
    return {
        "raw_rows": raw_rows,
        "feature_rows": feature_rows,
        "raw_bytes": raw_bytes,
        "feature_bytes": feature_bytes,
        "byte_ratio": raw_bytes / feature_bytes if feature_bytes else None,
        "feature_share": feature_bytes / raw_bytes if raw_bytes else None,
    }
