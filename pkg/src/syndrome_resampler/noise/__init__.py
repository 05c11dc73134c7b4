"""Bit-flip sampling, syndromes and seeded Monte Carlo batches."""

from .base import BatchAbortedError, DimensionError, SamplingError
from .batch import BLOCK_SIZE, block_rng, run_batch, sample_syndromes
from .sampling import (
    decode_syndrome,
    decode_syndromes,
    encode_syndrome,
    error_class_bits,
    pack_syndromes,
    residual_class,
    sample_error,
    sample_errors,
    syndrome_of,
    syndromes_of,
    trivial_key,
)

__all__ = [
    "BatchAbortedError",
    "DimensionError",
    "SamplingError",
    "BLOCK_SIZE",
    "block_rng",
    "run_batch",
    "sample_syndromes",
    "decode_syndrome",
    "decode_syndromes",
    "encode_syndrome",
    "error_class_bits",
    "pack_syndromes",
    "residual_class",
    "sample_error",
    "sample_errors",
    "syndrome_of",
    "syndromes_of",
    "trivial_key",
]
