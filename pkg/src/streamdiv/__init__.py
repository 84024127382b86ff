"""One-pass stream diversification with a single secretary-style replacement."""

from .base import (
    DiversityMeasure,
    MemoryBuffer,
    SelectionConfig,
    SelectionOutcome,
    dir_ratio,
    initialize_memory,
    run_selection,
)
from .estimator import MaxMinSelector, StreamDiversifier
from .numeric import VarianceDiversity
from .oracle import OracleVerdict, brute_force_best_swap, maxmin_select, timed_comparison
from .sampling import (
    BoundsReport,
    SamplingPlan,
    chernoff_p0,
    monte_carlo_success,
    optimal_k,
    secretary_bounds,
)
from .strings import EditDistanceDiversity, edit_distance

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "DiversityMeasure",
    "EditDistanceDiversity",
    "MaxMinSelector",
    "MemoryBuffer",
    "OracleVerdict",
    "SamplingPlan",
    "SelectionConfig",
    "SelectionOutcome",
    "StreamDiversifier",
    "VarianceDiversity",
    "brute_force_best_swap",
    "chernoff_p0",
    "dir_ratio",
    "edit_distance",
    "initialize_memory",
    "maxmin_select",
    "monte_carlo_success",
    "optimal_k",
    "run_selection",
    "secretary_bounds",
    "timed_comparison",
]
