"""fogmetry deployment - fog-only, cloud-only and hybrid cost modelling."""
from .profiles import DeploymentPlan, DeviceProfile, LinkProfile, PlanKind, default_plans
from .simulator import (
    COST_COLUMNS,
    CostReport,
    HostTimings,
    Payloads,
    compare_devices,
    measure_payload,
    reduction_summary,
    simulate,
    transmission_time,
)

__all__ = [
    'COST_COLUMNS',
    'CostReport',
    'DeploymentPlan',
    'DeviceProfile',
    'HostTimings',
    'LinkProfile',
    'Payloads',
    'PlanKind',
    'compare_devices',
    'default_plans',
    'measure_payload',
    'reduction_summary',
    'simulate',
    'transmission_time',
]
