"""Post-selection estimators."""

from .base import EmptyAfterDiscardError, EmptyBatchError, EstimatorError, MissingGapError
from .filters import cgps_filter, cgps_keep_mask, combined_sr_cgps, ps_estimate

__all__ = [
    "EmptyAfterDiscardError",
    "EmptyBatchError",
    "EstimatorError",
    "MissingGapError",
    "cgps_filter",
    "cgps_keep_mask",
    "combined_sr_cgps",
    "ps_estimate",
]
