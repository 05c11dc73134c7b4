"""Sampling errors."""

from syndrome_resampler.errors import DimensionError, ResamplerError


class SamplingError(ResamplerError):
    """Base exception for Monte Carlo sampling failures."""

    pass


class BatchAbortedError(SamplingError):
    """Raised when decoding fails for a record; carries the first failing record index."""

    def __init__(self, index: int, cause: Exception):
        self.index = index
        self.cause = cause
        super().__init__(f"batch aborted at record {index}: {cause}")


__all__ = ["SamplingError", "BatchAbortedError", "DimensionError"]
