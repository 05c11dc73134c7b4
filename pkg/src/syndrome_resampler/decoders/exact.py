"""Exact class-resolved decoding on the trellis.

All class labels are relative to the zero correction: class l of a syndrome is the
set of errors e with that syndrome and parity(e . z_logical) = l.
"""

import numpy as np

from syndrome_resampler.decoders.trellis import DEFAULT_MAX_STATE_BITS, get_trellis
from syndrome_resampler.errors import ContractViolationError
from syndrome_resampler.models import CodeSpec, LogicalClass, NoiseModel


def class_min_weights(
    code: CodeSpec, syndromes: np.ndarray, max_state_bits: int = DEFAULT_MAX_STATE_BITS
) -> np.ndarray:
    """Integer (S, 2) array of minimum weights per class for each syndrome row."""
    weights = get_trellis(code, max_state_bits).min_weights(syndromes)
    if not np.isfinite(weights).all():
        raise ContractViolationError(f"syndrome has an empty logical coset in {code.code_id}")
    return weights.astype(np.int64)


def min_weight_in_class(
    code: CodeSpec,
    s: np.ndarray,
    l: LogicalClass,  # noqa: E741
    max_state_bits: int = DEFAULT_MAX_STATE_BITS,
) -> int:
    """Exact minimum |e| over errors with syndrome ``s`` and class ``l``."""
    return int(class_min_weights(code, s, max_state_bits)[0, l.bit])


def gaps_from_weights(weights: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(gap, best class bit) from an (S, 2) class-minimum array; ties give gap 0 and class I."""
    best = (weights[:, 1] < weights[:, 0]).astype(np.uint8)
    gap = np.abs(weights[:, 1] - weights[:, 0])
    return gap, best


def complementary_gap(
    code: CodeSpec, s: np.ndarray, max_state_bits: int = DEFAULT_MAX_STATE_BITS
) -> tuple[int, LogicalClass]:
    """Weight difference between the best class and the other class."""
    gap, best = gaps_from_weights(class_min_weights(code, s, max_state_bits))
    return int(gap[0]), LogicalClass.from_bit(int(best[0]))


def mld_class_bits(
    code: CodeSpec,
    noise: NoiseModel,
    syndromes: np.ndarray,
    max_state_bits: int = DEFAULT_MAX_STATE_BITS,
) -> np.ndarray:
    """Most likely class per syndrome row; exact ties choose I."""
    logs = get_trellis(code, max_state_bits).log_coset_probabilities(syndromes, noise.p)
    return (logs[:, 1] > logs[:, 0]).astype(np.uint8)


def decode_mld(
    code: CodeSpec,
    noise: NoiseModel,
    s: np.ndarray,
    max_state_bits: int = DEFAULT_MAX_STATE_BITS,
) -> LogicalClass:
    """Maximum-likelihood logical class for syndrome ``s``."""
    return LogicalClass.from_bit(int(mld_class_bits(code, noise, s, max_state_bits)[0]))
