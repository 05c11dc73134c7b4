"""Syndrome resampling estimators."""

from .base import (
    EmptyAfterDiscardError,
    EmptyBatchError,
    EstimatorDomainError,
    EstimatorError,
    MissingGapError,
)
from .empirical import (
    acceptance_rate,
    empirical_power,
    good_power,
    resample_indices,
    resample_workflow,
    sample_bounds,
)
from .weighted import plain_estimate, sr_estimate, sr_estimate_batch, sr_variance, sr_weights

__all__ = [
    "EmptyAfterDiscardError",
    "EmptyBatchError",
    "EstimatorDomainError",
    "EstimatorError",
    "MissingGapError",
    "acceptance_rate",
    "empirical_power",
    "good_power",
    "resample_indices",
    "resample_workflow",
    "sample_bounds",
    "plain_estimate",
    "sr_estimate",
    "sr_estimate_batch",
    "sr_variance",
    "sr_weights",
]
