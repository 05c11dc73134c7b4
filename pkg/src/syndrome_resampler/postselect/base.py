"""Post-selection reuses the estimator error hierarchy."""

from syndrome_resampler.resampling.base import (
    EmptyAfterDiscardError,
    EmptyBatchError,
    EstimatorError,
    MissingGapError,
)

__all__ = ["EmptyAfterDiscardError", "EmptyBatchError", "EstimatorError", "MissingGapError"]
