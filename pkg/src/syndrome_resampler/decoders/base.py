"""Base decoder interface and decoder errors."""

from abc import ABC, abstractmethod

import numpy as np
from pydantic import BaseModel, ConfigDict

from syndrome_resampler.errors import (
    ContractViolationError,
    DimensionError,
    ResamplerError,
    ResourceError,
)
from syndrome_resampler.models import CodeSpec, LogicalClass


class DecoderError(ResamplerError):
    """Base exception for decoder failures."""

    pass


class DecodeResult(BaseModel):
    """A correction with its weight and logical class (relative to no correction)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    correction: np.ndarray
    weight: int
    logical_class: LogicalClass


class BaseDecoder(ABC):
    """Abstract base class for syndrome decoders.

    Decoders are pure functions of immutable inputs; one instance may be shared by
    many callers.
    """

    def __init__(self, code: CodeSpec):
        self.code = code
        self._z_logical = code.z_logical_mask()

    @abstractmethod
    def decode(self, syndrome: np.ndarray) -> DecodeResult:
        """Return a correction whose syndrome equals ``syndrome``."""
        pass

    def decode_batch(self, syndromes: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Decode rows of ``syndromes``; returns (weights, class bits)."""
        syndromes = self.check_syndromes(syndromes)
        weights = np.empty(len(syndromes), dtype=np.int64)
        classes = np.empty(len(syndromes), dtype=np.uint8)
        for i, row in enumerate(syndromes):
            result = self.decode(row)
            weights[i] = result.weight
            classes[i] = result.logical_class.bit
        return weights, classes

    def check_syndromes(self, syndromes: np.ndarray) -> np.ndarray:
        syndromes = np.atleast_2d(np.asarray(syndromes, dtype=np.uint8))
        if syndromes.shape[1] != self.code.num_checks:
            raise DimensionError(
                f"syndrome has {syndromes.shape[1]} bits, code {self.code.code_id} "
                f"has {self.code.num_checks} checks"
            )
        return syndromes

    def result_from_correction(self, correction: np.ndarray) -> DecodeResult:
        correction = np.asarray(correction, dtype=np.uint8)
        parity = int(correction.astype(np.int64) @ self._z_logical) % 2
        return DecodeResult(
            correction=correction,
            weight=int(correction.sum()),
            logical_class=LogicalClass.from_bit(parity),
        )


__all__ = [
    "BaseDecoder",
    "DecodeResult",
    "DecoderError",
    "ContractViolationError",
    "DimensionError",
    "ResourceError",
]
