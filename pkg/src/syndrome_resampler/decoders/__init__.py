"""Decoders: exact matching, trellis class minima and maximum likelihood."""

from .base import (
    BaseDecoder,
    ContractViolationError,
    DecodeResult,
    DecoderError,
    DimensionError,
    ResourceError,
)
from .exact import (
    class_min_weights,
    complementary_gap,
    decode_mld,
    gaps_from_weights,
    min_weight_in_class,
    mld_class_bits,
)
from .mwpm import BlossomDecoder, PyMatchingDecoder, decode_mwpm, matching_decoder
from .trellis import Trellis, get_trellis

__all__ = [
    "BaseDecoder",
    "ContractViolationError",
    "DecodeResult",
    "DecoderError",
    "DimensionError",
    "ResourceError",
    "class_min_weights",
    "complementary_gap",
    "decode_mld",
    "gaps_from_weights",
    "min_weight_in_class",
    "mld_class_bits",
    "BlossomDecoder",
    "PyMatchingDecoder",
    "decode_mwpm",
    "matching_decoder",
    "Trellis",
    "get_trellis",
]
