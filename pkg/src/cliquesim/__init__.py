"""Interaction-driven clique-weight random graphs: simulation and checks."""

__version__ = "0.1.0"

from .sampling import GENERATOR_FAMILY, RandomSource, WeightTree, uniform_distinct_subset
from .snapshots import Snapshot
from .evolution import (
    GraphState,
    ModelParams,
    RunAborted,
    available_engines,
    run,
    select_engine,
)

__all__ = [
    "GENERATOR_FAMILY",
    "GraphState",
    "ModelParams",
    "RandomSource",
    "RunAborted",
    "Snapshot",
    "WeightTree",
    "available_engines",
    "run",
    "select_engine",
    "uniform_distinct_subset",
    "__version__",
]
