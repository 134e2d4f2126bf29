"""
Device, link and plan descriptions for the three deployment architectures.
"""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List

from utils.errors import ConfigError


class PlanKind(str, Enum):
    FOG_ONLY = "FogOnly"
    CLOUD_ONLY = "CloudOnly"
    HYBRID = "Hybrid"


@dataclass(frozen=True)
class DeviceProfile:
    """speed_factor multiplies measured host time; 1.0 = the benchmark host."""

    name: str
    speed_factor: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.speed_factor) and self.speed_factor > 0):
            raise ConfigError(f"{self.name}: speed_factor must be finite and > 0")

    def scale(self, host_seconds: float) -> float:
        return host_seconds * self.speed_factor


@dataclass(frozen=True)
class LinkProfile:
    """Fog-to-cloud uplink; overhead multiplies the ideal bandwidth time."""

    uplink_bps: float = 1_000_000.0
    overhead: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.uplink_bps) and self.uplink_bps > 0):
            raise ConfigError("uplink_bps must be finite and > 0")
        if not (math.isfinite(self.overhead) and self.overhead > 0):
            raise ConfigError("overhead must be finite and > 0")


@dataclass(frozen=True)
class DeploymentPlan:
    kind: PlanKind
    fog: DeviceProfile = field(default_factory=lambda: DeviceProfile("fog-gateway", 10.0))
    cloud: DeviceProfile = field(default_factory=lambda: DeviceProfile("cloud", 1.0))
    link: LinkProfile = field(default_factory=LinkProfile)
    # FogOnly only: upload the feature rows for storage
    fog_archive: bool = False


def default_plans(deployment_config: Dict[str, Any]) -> List[DeploymentPlan]:
    """The FogOnly, CloudOnly and Hybrid plans from the `deployment` config section."""
    fog_cfg = deployment_config.get("fog", {})
    cloud_cfg = deployment_config.get("cloud", {})
    fog = DeviceProfile(fog_cfg.get("name", "fog-gateway"), float(fog_cfg.get("speed_factor", 10.0)))
    cloud = DeviceProfile(cloud_cfg.get("name", "cloud"), float(cloud_cfg.get("speed_factor", 1.0)))
    link = LinkProfile(float(deployment_config.get("uplink_bps", 1_000_000.0)),
                       float(deployment_config.get("overhead", 1.0)))
    archive = bool(deployment_config.get("fog_archive", False))
    return [
        DeploymentPlan(PlanKind.FOG_ONLY, fog, cloud, link, fog_archive=archive),
        DeploymentPlan(PlanKind.CLOUD_ONLY, fog, cloud, link),
        DeploymentPlan(PlanKind.HYBRID, fog, cloud, link),
    ]
