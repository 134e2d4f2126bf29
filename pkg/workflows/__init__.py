"""fogmetry workflows - pipeline coordination and report writing."""
from .coordinator import BenchmarkReport, PipelineCoordinator, benchmark_pipeline
from .reporting import to_csv, to_json, write_text

__all__ = ['BenchmarkReport', 'PipelineCoordinator', 'benchmark_pipeline', 'to_csv', 'to_json', 'write_text']
