"""Power distributions, Renyi coherent information and exact resampled failure rates.

All quantities are in bits. Powers of P(s) are formed in the log domain so that
Z_alpha survives large alpha and long codes.
"""

import logging
import math
from collections.abc import Mapping

import numpy as np
from scipy.special import logsumexp

from syndrome_resampler.decoders import matching_decoder, mld_class_bits
from syndrome_resampler.decoders.trellis import DEFAULT_MAX_STATE_BITS, get_trellis
from syndrome_resampler.exact.base import ClassMapError, DistributionDomainError
from syndrome_resampler.models import (
    CodeSpec,
    DecoderMethod,
    JointDistribution,
    LogicalClass,
    MatchingBackend,
    NoiseModel,
    PowerDistribution,
    RciValue,
    index_to_key,
    key_to_index,
)
from syndrome_resampler.noise.batch import sample_syndromes

logger = logging.getLogger(__name__)

LN2 = math.log(2.0)
# Relative tolerance for treating two syndrome probabilities as the same mode.
MODE_RTOL = 1e-12
ALPHA_ONE_TOL = 1e-9


def _check_alpha(alpha: float, allow_inf: bool = False) -> float:
    alpha = float(alpha)
    if math.isnan(alpha) or alpha < 0:
        raise DistributionDomainError(f"alpha must be >= 0, got {alpha}")
    if math.isinf(alpha) and not allow_inf:
        raise DistributionDomainError("alpha must be finite here")
    return alpha


def _log(values: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return np.log(values)


def _powered(log_values: np.ndarray, alpha: float) -> np.ndarray:
    """alpha * ln(v) with 0^alpha = 0 for every alpha (including alpha = 0)."""
    finite = np.isfinite(log_values)
    return np.where(finite, alpha * np.where(finite, log_values, 0.0), -np.inf)


def power_distribution(joint: JointDistribution, alpha: float) -> PowerDistribution:
    """Q_alpha(s) = P^alpha(s) / Z_alpha over every syndrome index.

    ``alpha = inf`` gives the post-selection limit: Q is uniform over the modal
    syndromes and ``log2_normalizer`` is log2 of their number.
    """
    alpha = _check_alpha(alpha, allow_inf=True)
    marginal = joint.syndrome_probabilities
    if math.isinf(alpha):
        modes = marginal >= marginal.max() * (1.0 - MODE_RTOL)
        q = modes / modes.sum()
        return PowerDistribution(
            alpha=alpha,
            num_checks=joint.num_checks,
            log2_normalizer=math.log2(int(modes.sum())),
            probabilities=q,
        )
    log_power = _powered(_log(marginal), alpha)
    log_z = float(logsumexp(log_power))
    return PowerDistribution(
        alpha=alpha,
        num_checks=joint.num_checks,
        log2_normalizer=log_z / LN2,
        probabilities=np.exp(log_power - log_z),
    )


def _binary_entropy(cond: np.ndarray) -> np.ndarray:
    safe = np.where(cond > 0, cond, 1.0)
    return -(cond * np.log2(safe)).sum(axis=1)


def _rci_from_logs(
    log_marginal: np.ndarray, log_cond: np.ndarray, alpha: float
) -> tuple[float, float]:
    """(log2 numerator, log2 denominator) of the Renyi ratio over supported syndromes."""
    log_num = logsumexp(_powered(log_marginal, alpha))
    log_inner = logsumexp(_powered(log_cond, alpha), axis=1)
    log_den = logsumexp(_powered(log_marginal, alpha) + log_inner)
    return float(log_num) / LN2, float(log_den) / LN2


def rci(joint: JointDistribution, alpha: float, k: int = 1, raw: bool = False) -> RciValue:
    """Renyi coherent information of the noisy encoded state in bits.

    ``raw=True`` drops the additive ``k`` so that p = 0 evaluates to 0.
    At alpha = 1 the von Neumann limit k - sum_s P(s) H2(P(l|s)) is used.
    """
    alpha = _check_alpha(alpha)
    shift = 0 if raw else k
    support = joint.supported
    marginal = joint.syndrome_probabilities[support]
    cond = joint.conditional()[support]
    if abs(alpha - 1.0) < ALPHA_ONE_TOL:
        value = shift - math.fsum(marginal * _binary_entropy(cond))
    else:
        log_num, log_den = _rci_from_logs(_log(marginal), _log(cond), alpha)
        value = shift + (log_num - log_den) / (1.0 - alpha)
    return RciValue(alpha=alpha, value=value, raw=raw, method=joint.method.value)


def rci_sampled(
    code: CodeSpec,
    noise: NoiseModel,
    alpha: float,
    n_samples: int,
    seed: int = 0,
    k: int = 1,
    raw: bool = False,
    max_state_bits: int = DEFAULT_MAX_STATE_BITS,
    workers: int = 1,
) -> RciValue:
    """Monte Carlo RCI for codes whose full syndrome table is out of reach.

    Syndromes are drawn from P(s); P(s) and P(l|s) for each drawn syndrome come
    exactly from the trellis. Sums over s become averages of P^(alpha-1)(s)
    weighted terms; the error is a delta-method standard error.
    """
    alpha = _check_alpha(alpha)
    if n_samples < 2:
        raise DistributionDomainError(f"n_samples must be >= 2, got {n_samples}")
    packed, _ = sample_syndromes(code, noise, n_samples, seed, workers)
    unique, inverse = np.unique(packed, axis=0, return_inverse=True)
    inverse = np.asarray(inverse).reshape(-1)
    syndromes = np.unpackbits(unique, axis=1, bitorder="little")[:, : code.num_checks]
    logs = get_trellis(code, max_state_bits).log_coset_probabilities(syndromes, noise.p)
    log_marginal = logsumexp(logs, axis=1)
    log_cond = logs - log_marginal[:, None]
    shift = 0 if raw else k

    if abs(alpha - 1.0) < ALPHA_ONE_TOL:
        h = _binary_entropy(np.exp(log_cond))[inverse]
        value = shift - float(h.mean())
        std_error = float(h.std(ddof=1) / math.sqrt(n_samples))
    else:
        log_a = ((alpha - 1.0) * log_marginal)[inverse]
        log_g = logsumexp(_powered(log_cond, alpha), axis=1)[inverse]
        scale = log_a.max()
        a = np.exp(log_a - scale)
        b = a * np.exp(log_g)
        mean_a, mean_b = a.mean(), b.mean()
        value = shift + math.log2(mean_a / mean_b) / (1.0 - alpha)
        cov = np.cov(np.vstack([a, b]), ddof=1)
        var_log = (
            cov[0, 0] / mean_a**2 + cov[1, 1] / mean_b**2 - 2.0 * cov[0, 1] / (mean_a * mean_b)
        ) / n_samples
        std_error = math.sqrt(max(var_log, 0.0)) / (LN2 * abs(1.0 - alpha))
    logger.info(
        "sampled RCI for %s p=%g alpha=%g: %.6f +/- %.2g",
        code.code_id,
        noise.p,
        alpha,
        value,
        std_error,
    )
    return RciValue(alpha=alpha, value=value, raw=raw, method="sampled", std_error=std_error)


def renyi_entropy(joint: JointDistribution, alpha: float) -> float:
    """Renyi entropy of P(s) in bits; Shannon at alpha = 1, min-entropy at alpha = inf."""
    alpha = _check_alpha(alpha, allow_inf=True)
    marginal = joint.syndrome_probabilities
    if math.isinf(alpha):
        return -math.log2(float(marginal.max()))
    if abs(alpha - 1.0) < ALPHA_ONE_TOL:
        support = marginal[marginal > 0]
        return float(-(support * np.log2(support)).sum())
    return power_distribution(joint, alpha).log2_normalizer / (1.0 - alpha)


ClassMap = Mapping[str, LogicalClass] | np.ndarray


def _class_bits(joint: JointDistribution, class_map: ClassMap) -> np.ndarray:
    """Dense class bits over supported syndromes; the rest are left at 0."""
    support = joint.supported
    if isinstance(class_map, np.ndarray):
        if class_map.shape != (1 << joint.num_checks,):
            raise ClassMapError(
                f"dense class map must have {1 << joint.num_checks} entries, "
                f"got shape {class_map.shape}"
            )
        return class_map.astype(np.int64)
    bits = np.zeros(1 << joint.num_checks, dtype=np.int64)
    for index in support:
        key = index_to_key(int(index), joint.key_bytes)
        if key not in class_map:
            raise ClassMapError(f"class map has no entry for supported syndrome {key}")
        bits[index] = LogicalClass(class_map[key]).bit
    return bits


def exact_resampled_failure(
    joint: JointDistribution, alpha: float, class_map: ClassMap
) -> float:
    """Sum over s of Q_alpha(s) (1 - P(class_map(s) | s)).

    ``class_map`` is either a mapping from syndrome keys to classes or a dense
    array of class bits indexed by syndrome integer.
    """
    q = power_distribution(joint, alpha).probabilities
    cond = joint.conditional()
    bits = _class_bits(joint, class_map)
    support = joint.supported
    wrong = cond[support, 1 - bits[support]]
    return math.fsum(q[support] * wrong)


def mld_class_map(joint: JointDistribution) -> np.ndarray:
    """Dense argmax_l P(s, l) class bits; exact ties choose I."""
    return (joint.table[:, 1] > joint.table[:, 0]).astype(np.int64)


def decoder_class_bits(
    code: CodeSpec,
    noise: NoiseModel,
    decoder: DecoderMethod = DecoderMethod.MWPM,
    indices: np.ndarray | None = None,
    backend: MatchingBackend = MatchingBackend.PYMATCHING,
    max_state_bits: int = DEFAULT_MAX_STATE_BITS,
) -> np.ndarray:
    """Decoder class bit for each syndrome integer in ``indices`` (all 2^m by default)."""
    m = code.num_checks
    if indices is None:
        indices = np.arange(1 << m, dtype=np.int64)
    indices = np.asarray(indices, dtype=np.int64)
    syndromes = ((indices[:, None] >> np.arange(m, dtype=np.int64)) & 1).astype(np.uint8)
    if decoder is DecoderMethod.MLD:
        return mld_class_bits(code, noise, syndromes, max_state_bits).astype(np.int64)
    _, classes = matching_decoder(code, backend).decode_batch(syndromes)
    return classes.astype(np.int64)


def decoder_class_table(
    code: CodeSpec,
    noise: NoiseModel,
    decoder: DecoderMethod = DecoderMethod.MWPM,
    keys: list[str] | tuple[str, ...] | None = None,
    backend: MatchingBackend = MatchingBackend.PYMATCHING,
) -> dict[str, LogicalClass]:
    """Class map {syndrome key: decoder class} for ``keys`` (all syndromes by default)."""
    if keys is None:
        indices = np.arange(1 << code.num_checks, dtype=np.int64)
        keys = [index_to_key(int(i), code.key_bytes) for i in indices]
    else:
        indices = np.array([key_to_index(k) for k in keys], dtype=np.int64)
    bits = decoder_class_bits(code, noise, decoder, indices, backend)
    return {key: LogicalClass.from_bit(int(b)) for key, b in zip(keys, bits, strict=True)}
