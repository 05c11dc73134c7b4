"""Errors for exact distribution computations."""

from syndrome_resampler.errors import ContractViolationError, ResamplerError, ResourceError


class ExactError(ResamplerError):
    """Base exception for exact distribution failures."""

    pass


class DistributionDomainError(ExactError):
    """Raised for parameters outside an exact quantity's domain (e.g. alpha < 0)."""

    pass


class ClassMapError(ExactError, ContractViolationError):
    """Raised when a class map does not cover every supported syndrome."""

    pass


__all__ = ["ExactError", "DistributionDomainError", "ClassMapError", "ResourceError"]
