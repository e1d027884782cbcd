"""Benchmark harness: generators, pipeline orchestration, statistics."""

from .engines import EngineSpec
from .gaugeavg import gauge_average
from .generators import INSTANCE_KINDS, generate_instance, load_instance
from .makespan import makespan_binary_search
from .pipeline import RunConfig, RunResult, StageFailure, run_pipeline
from .stats import reads_to_solution, tts

__all__ = [
    "EngineSpec",
    "gauge_average",
    "generate_instance",
    "load_instance",
    "INSTANCE_KINDS",
    "makespan_binary_search",
    "RunConfig",
    "RunResult",
    "StageFailure",
    "run_pipeline",
    "tts",
    "reads_to_solution",
]
