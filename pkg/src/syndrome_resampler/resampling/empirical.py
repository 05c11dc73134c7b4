"""Finite-data syndrome resampling built on Good's power estimator.

With c_s occurrences of syndrome s in N samples, C(c_s, alpha) / C(N, alpha) is an
unbiased estimate of P^alpha(s). Syndromes seen fewer than alpha times estimate to
exactly zero and drop out of the resampled distribution.
"""

import logging
import math
from collections.abc import Mapping

import numpy as np
from scipy.special import gammaln

from syndrome_resampler.models import (
    CodeSpec,
    EmpiricalPowerDistribution,
    Estimate,
    EstimationMethod,
    NoiseModel,
    SampleBatch,
    SampleBounds,
)
from syndrome_resampler.resampling.base import (
    EmptyAfterDiscardError,
    EmptyBatchError,
    EstimatorDomainError,
)

logger = logging.getLogger(__name__)

# Above this alpha the falling-factorial product is replaced by log-gamma.
PRODUCT_ALPHA_LIMIT = 32


def _check_integer_alpha(alpha: float) -> int:
    if alpha != int(alpha) or alpha < 1:
        raise EstimatorDomainError(f"alpha must be a positive integer, got {alpha}")
    return int(alpha)


def good_power(counts: np.ndarray, n_samples: int, alpha: int) -> np.ndarray:
    """C(c, alpha) / C(N, alpha) for every count c; zero where c < alpha or alpha > N."""
    counts = np.asarray(counts, dtype=np.float64)
    if alpha > n_samples:
        return np.zeros_like(counts)
    if alpha <= PRODUCT_ALPHA_LIMIT:
        out = np.ones_like(counts)
        for j in range(alpha):
            out *= np.maximum(counts - j, 0.0) / (n_samples - j)
        return out
    out = np.zeros_like(counts)
    ok = counts >= alpha
    c = counts[ok]
    log_ratio = (gammaln(c + 1) - gammaln(c - alpha + 1)) - (
        gammaln(n_samples + 1) - gammaln(n_samples - alpha + 1)
    )
    out[ok] = np.exp(log_ratio)
    return out


def empirical_power(
    counts: Mapping[str, int], n_samples: int, alpha: int
) -> EmpiricalPowerDistribution:
    """Good's estimate of P^alpha(s) for every observed syndrome.

    Raises:
        EstimatorDomainError: If alpha is not a positive integer or the counts do
            not sum to ``n_samples``.
    """
    alpha = _check_integer_alpha(alpha)
    keys = tuple(counts)
    values = np.array([counts[k] for k in keys], dtype=np.int64)
    if (values < 0).any() or int(values.sum()) != n_samples:
        raise EstimatorDomainError(f"counts sum to {int(values.sum())}, expected N={n_samples}")
    return EmpiricalPowerDistribution(
        alpha=alpha,
        n_samples=n_samples,
        keys=keys,
        power=good_power(values, n_samples, alpha),
    )


def acceptance_rate(batch: SampleBatch, alpha: int) -> float:
    """Fraction of samples whose syndrome occurs at least ``alpha`` times."""
    if batch.n == 0:
        raise EmptyBatchError("batch is empty")
    counts = batch.key_counts
    return float(counts[counts >= alpha].sum()) / batch.n


def _generator(rng: np.random.Generator | None, seed: int) -> np.random.Generator:
    return rng if rng is not None else np.random.Generator(np.random.Philox(seed))


def resample_indices(
    batch: SampleBatch,
    alpha: int,
    n_tilde: int | None = None,
    rng: np.random.Generator | None = None,
    seed: int = 0,
) -> tuple[np.ndarray, float]:
    """Record indices drawn by the resampling procedure, and the discard-stage acceptance.

    Syndromes seen fewer than alpha times are discarded, Ñ keys are drawn from the
    normalised Good estimate of the survivors, and each draw picks one of that
    syndrome's occurrences uniformly (with replacement). Ñ defaults to the number
    of kept samples. At alpha = 1 no resampling happens and every index is returned.
    """
    alpha = _check_integer_alpha(alpha)
    if batch.n == 0:
        raise EmptyBatchError("batch is empty")
    if alpha == 1:
        return np.arange(batch.n), 1.0

    counts = batch.key_counts
    survivors = np.flatnonzero(counts >= alpha)
    kept = int(counts[survivors].sum())
    if kept == 0:
        raise EmptyAfterDiscardError(
            "resample", f"no syndrome occurs {alpha} or more times in {batch.n} samples"
        )
    power = good_power(counts[survivors], batch.n, alpha)
    q = power / power.sum()
    draws = kept if n_tilde is None else n_tilde
    if draws < 1:
        raise EstimatorDomainError(f"n_tilde must be >= 1, got {draws}")

    gen = _generator(rng, seed)
    chosen = survivors[gen.choice(len(survivors), size=draws, p=q)]
    order = np.argsort(batch.syndrome_index, kind="stable")
    starts = np.concatenate(([0], np.cumsum(counts)[:-1]))
    offsets = gen.integers(0, counts[chosen])
    return order[starts[chosen] + offsets], kept / batch.n


def resample_workflow(
    batch: SampleBatch,
    alpha: int,
    n_tilde: int | None = None,
    rng: np.random.Generator | None = None,
    seed: int = 0,
) -> tuple[Estimate, np.ndarray]:
    """Empirical SR estimate: the mean failure over the resampled records.

    Returns the estimate and the indices of the picked records. ``std_error`` is
    the binomial error over the Ñ draws. It ignores the noise of the Good estimate
    the draws come from, so it is a lower bound; use ``bootstrap_estimate`` for an
    interval that covers both.

    Raises:
        EmptyAfterDiscardError: If no syndrome reaches a count of alpha.
    """
    picks, acceptance = resample_indices(batch, alpha, n_tilde, rng, seed)
    x = batch.failures[picks].astype(np.float64)
    value = float(x.mean())
    logger.debug(
        "resampled %d of %d samples at alpha=%d, acceptance %.4f",
        len(picks),
        batch.n,
        alpha,
        acceptance,
    )
    estimate = Estimate(
        value=value,
        std_error=math.sqrt(value * (1.0 - value) / len(picks)),
        method=EstimationMethod.SR_EMPIRICAL,
        alpha=float(alpha),
        acceptance=acceptance,
        effective_samples=float(len(picks)),
        n_samples=batch.n,
        metadata={
            "n_tilde": int(len(picks)),
            "n_tilde_rule": "kept" if n_tilde is None else "given",
            "with_replacement": True,
            "std_error_is_lower_bound": True,
        },
    )
    return estimate, picks


def sample_bounds(alpha: int, code: CodeSpec, noise: NoiseModel) -> SampleBounds:
    """Lower bounds on N before any syndrome is expected to occur alpha times.

    P_max is taken as the trivial-syndrome probability (1 - p)^n.
    """
    n, p = code.n, noise.p
    p_max = (1.0 - p) ** n
    return SampleBounds(
        alpha=alpha,
        p_max=p_max,
        generic=alpha / p_max if p_max > 0 else math.inf,
        low_p=alpha * math.exp(n * p),
        high_p=alpha * 2.0 ** (n - code.k),
    )
