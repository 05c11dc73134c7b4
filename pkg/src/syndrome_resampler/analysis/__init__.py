"""Bootstrap intervals, scaling collapse and crossing points."""

from .base import (
    AmbiguousCrossingError,
    AnalysisError,
    DegenerateInputError,
    FitFailureError,
    NoCrossingError,
)
from .bootstrap import BatchEstimator, bootstrap_ci, bootstrap_estimate, resample_batch
from .collapse import scaling_collapse, scaling_variable, synthetic_scaling_points
from .crossing import crossing_point, crossings

__all__ = [
    "AmbiguousCrossingError",
    "AnalysisError",
    "DegenerateInputError",
    "FitFailureError",
    "NoCrossingError",
    "BatchEstimator",
    "bootstrap_ci",
    "bootstrap_estimate",
    "resample_batch",
    "scaling_collapse",
    "scaling_variable",
    "synthetic_scaling_points",
    "crossing_point",
    "crossings",
]
