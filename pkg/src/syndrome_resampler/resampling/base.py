"""Estimator errors shared by the resampling and post-selection estimators."""

from syndrome_resampler.errors import ContractViolationError, ResamplerError


class EstimatorError(ResamplerError):
    """Base exception for logical-error-rate estimators."""

    pass


class EmptyBatchError(EstimatorError):
    """Raised when an estimator receives no records."""

    pass


class EstimatorDomainError(EstimatorError):
    """Raised for inputs outside an estimator's domain (P(s) <= 0, non-integer alpha, ...)."""

    pass


class EmptyAfterDiscardError(EstimatorError):
    """Raised when a discard stage leaves no samples; ``stage`` names the stage."""

    def __init__(self, stage: str, message: str | None = None):
        self.stage = stage
        super().__init__(message or f"no samples left after the '{stage}' stage")


class MissingGapError(EstimatorError, ContractViolationError):
    """Raised when gap-based post-selection runs on records without a gap."""

    pass
