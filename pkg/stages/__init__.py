"""fogmetry stages - pipeline stage processors run by the coordinator."""
from .analytics_stage import AnalyticsStage
from .base_stage import BaseStage
from .fusion_stage import FusionStage
from .ingest_stage import IngestStage

__all__ = ['AnalyticsStage', 'BaseStage', 'FusionStage', 'IngestStage']
