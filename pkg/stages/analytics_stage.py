"""
Analytics Stage - cross-validates every requested classifier on the feature rows.
"""
from typing import Any, Dict

from evaluation.cross_validation import cross_validate

from .base_stage import BaseStage


class AnalyticsStage(BaseStage):
    """Runs k-fold cross-validation per model spec."""

    def __init__(self, config: Dict[str, Any]):
        super().__init__("Analytics", config)

    def process(self, input_data: Dict[str, Any]) -> Dict[str, Any]:
        """
        Args:
            input_data: Dictionary containing:
                - dataset: FeatureDataset
                - specs: list of ModelSpec

        Returns:
            Dictionary with eval_reports, one per spec, in spec order
        """
        dataset = input_data["dataset"]
        k = int(self.config.get("k_folds", 10))
        seed = int(self.config.get("seed", 42))
        threads = int(self.config.get("threads", 1))

        reports = []
        for spec in input_data["specs"]:
            report = cross_validate(dataset, spec, k=k, seed=seed, threads=threads,
                                    progress=bool(self.config.get("progress", False)))
            reports.append(report)
            self.log_action("cross_validate", {
                "model": spec.kind,
                "accuracy": report.overall_accuracy,
                "k": k,
            })
        return {"eval_reports": reports}
