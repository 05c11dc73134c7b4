"""Exact joint tables P(s, l) by brute-force enumeration or trellis sum-product."""

import logging
from typing import Literal

import numpy as np

from syndrome_resampler.decoders.trellis import (
    DEFAULT_MAX_ELEMENTS,
    DEFAULT_MAX_STATE_BITS,
    DEFAULT_MAX_SYNDROME_BITS,
    get_trellis,
)
from syndrome_resampler.errors import ResourceError
from syndrome_resampler.models import CodeSpec, JointDistribution, JointMethod, NoiseModel
from syndrome_resampler.parallel import parallel_map

logger = logging.getLogger(__name__)

MAX_ENUMERATION_QUBITS = 26
ENUMERATION_CHUNK = 1 << 16


def _count_range(code: CodeSpec, start: int, stop: int) -> np.ndarray:
    """Pattern counts per (syndrome index, class, weight) for patterns in [start, stop)."""
    n, m = code.n, code.num_checks
    patterns = np.arange(start, stop, dtype=np.int64)
    bits = ((patterns[:, None] >> np.arange(n, dtype=np.int64)) & 1).astype(np.int64)
    syndrome_bits = (bits @ code.z_check_matrix().astype(np.int64).T) % 2
    index = syndrome_bits @ (np.int64(1) << np.arange(m, dtype=np.int64))
    cls = (bits @ code.z_logical_mask().astype(np.int64)) % 2
    weight = bits.sum(axis=1)
    flat = (index * 2 + cls) * (n + 1) + weight
    return np.bincount(flat, minlength=(1 << m) * 2 * (n + 1)).astype(np.int64)


def enumerate_joint(
    code: CodeSpec,
    noise: NoiseModel,
    max_qubits: int = MAX_ENUMERATION_QUBITS,
    workers: int = 1,
) -> JointDistribution:
    """P(s, l) by summing p^|e| (1-p)^(n-|e|) over all 2^n X patterns.

    Patterns are first counted exactly per (syndrome, class, weight); the only
    floating point work is the final weight-enumerator sum.

    Raises:
        ResourceError: If ``code.n`` exceeds ``max_qubits``.
    """
    n, m = code.n, code.num_checks
    if n > max_qubits:
        raise ResourceError(
            f"enumeration of {code.code_id} needs 2^{n} patterns, budget is 2^{max_qubits}"
        )
    total = 1 << n
    jobs = [
        (code, s, min(s + ENUMERATION_CHUNK, total)) for s in range(0, total, ENUMERATION_CHUNK)
    ]
    counts = np.sum(parallel_map(_count_range, jobs, workers), axis=0)
    counts = counts.reshape(1 << m, 2, n + 1)

    w = np.arange(n + 1)
    p = noise.p
    weight_probs = np.power(p, w) * np.power(1.0 - p, n - w)
    table = counts.astype(np.float64) @ weight_probs
    logger.debug("enumerated %d patterns of %s at p=%g", total, code.code_id, p)
    return JointDistribution(
        code_id=code.code_id, p=p, num_checks=m, method=JointMethod.ENUMERATION, table=table
    )


def trellis_joint(
    code: CodeSpec,
    noise: NoiseModel,
    max_state_bits: int = DEFAULT_MAX_STATE_BITS,
    max_syndrome_bits: int = DEFAULT_MAX_SYNDROME_BITS,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> JointDistribution:
    """Full P(s, l) table from one syndrome-tracking trellis sweep."""
    table = get_trellis(code, max_state_bits).joint_table(
        noise.p, max_syndrome_bits=max_syndrome_bits, max_elements=max_elements
    )
    return JointDistribution(
        code_id=code.code_id,
        p=noise.p,
        num_checks=code.num_checks,
        method=JointMethod.TRELLIS,
        table=np.clip(table, 0.0, None),
    )


def joint_distribution(
    code: CodeSpec,
    noise: NoiseModel,
    method: JointMethod | Literal["auto"] = "auto",
    workers: int = 1,
) -> JointDistribution:
    """Exact joint table, enumerating when n is small enough and using the trellis otherwise."""
    if method == "auto":
        method = (
            JointMethod.ENUMERATION if code.n <= MAX_ENUMERATION_QUBITS else JointMethod.TRELLIS
        )
    if JointMethod(method) is JointMethod.ENUMERATION:
        return enumerate_joint(code, noise, workers=workers)
    return trellis_joint(code, noise)


def coset_probabilities(
    code: CodeSpec,
    noise: NoiseModel,
    syndromes: np.ndarray,
    max_state_bits: int = DEFAULT_MAX_STATE_BITS,
) -> np.ndarray:
    """[P(s, I), P(s, X)] for each syndrome row, shape (S, 2)."""
    logs = get_trellis(code, max_state_bits).log_coset_probabilities(syndromes, noise.p)
    return np.exp(logs)


def coset_probability(
    code: CodeSpec,
    noise: NoiseModel,
    s: np.ndarray,
    max_state_bits: int = DEFAULT_MAX_STATE_BITS,
) -> tuple[float, float]:
    """Exact (P(s, I), P(s, X)) for one syndrome."""
    row = coset_probabilities(code, noise, s, max_state_bits)[0]
    return float(row[0]), float(row[1])
