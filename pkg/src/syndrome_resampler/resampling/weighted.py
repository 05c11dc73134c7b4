"""Exact-weight syndrome resampling estimator and the plain decoder baseline.

Each record contributes weight P^(alpha-1)(s). Weights are built in the log domain
and normalised by their maximum before exponentiation.
"""

import math

import numpy as np

from syndrome_resampler.models import Estimate, EstimationMethod, SampleBatch
from syndrome_resampler.resampling.base import EmptyBatchError, EstimatorDomainError


def _records(probabilities, failures) -> tuple[np.ndarray, np.ndarray]:
    probs = np.asarray(probabilities, dtype=np.float64).reshape(-1)
    x = np.asarray(failures).reshape(-1)
    if len(probs) == 0:
        raise EmptyBatchError("no records to estimate from")
    if len(probs) != len(x):
        raise EstimatorDomainError(f"{len(probs)} probabilities for {len(x)} failure bits")
    if not (np.isfinite(probs).all() and (probs > 0).all()):
        raise EstimatorDomainError("every record needs a probability P(s) > 0")
    if not np.isin(x, (0, 1)).all():
        raise EstimatorDomainError("failure bits must be 0 or 1")
    return probs, x.astype(np.float64)


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not math.isfinite(alpha) or alpha < 1:
        raise EstimatorDomainError(f"alpha must be a finite real >= 1, got {alpha}")
    return alpha


def sr_weights(probabilities, alpha: float) -> np.ndarray:
    """P^(alpha-1)(s_i) scaled so the largest weight is 1."""
    log_w = (_check_alpha(alpha) - 1.0) * np.log(np.asarray(probabilities, dtype=np.float64))
    return np.exp(log_w - log_w.max())


def _variance(x: np.ndarray, weights: np.ndarray) -> float:
    p_hat = math.fsum(x) / len(x)
    return p_hat * (1.0 - p_hat) * math.fsum(weights**2) / math.fsum(weights) ** 2


def sr_variance(probabilities, failures, alpha: float) -> float:
    """Estimator variance p(1-p) * sum w^2 / (sum w)^2 with p the unweighted mean of X."""
    probs, x = _records(probabilities, failures)
    return _variance(x, sr_weights(probs, alpha))


def sr_estimate(probabilities, failures, alpha: float) -> Estimate:
    """Weighted logical error rate sum w X / sum w with w = P^(alpha-1)(s).

    Raises:
        EmptyBatchError: If there are no records.
        EstimatorDomainError: If any P(s) <= 0 or alpha < 1.
    """
    probs, x = _records(probabilities, failures)
    weights = sr_weights(probs, alpha)
    total = math.fsum(weights)
    value = min(max(math.fsum(weights * x) / total, 0.0), 1.0)
    return Estimate(
        value=value,
        std_error=math.sqrt(_variance(x, weights)),
        method=EstimationMethod.SR_EXACT,
        alpha=float(alpha),
        acceptance=1.0,
        effective_samples=total**2 / math.fsum(weights**2),
        n_samples=len(x),
    )


def sr_estimate_batch(batch: SampleBatch, alpha: float) -> Estimate:
    """:func:`sr_estimate` over a batch whose records carry P(s)."""
    if batch.n == 0:
        raise EmptyBatchError("batch is empty")
    if not batch.has_probabilities:
        raise EstimatorDomainError(
            "batch records carry no exact P(s); simulate with exact probabilities"
        )
    return sr_estimate(batch.p_s, batch.failures, alpha)


def plain_estimate(batch: SampleBatch) -> Estimate:
    """Bare decoder failure rate: the mean of X with a binomial standard error."""
    if batch.n == 0:
        raise EmptyBatchError("batch is empty")
    value = float(batch.failures.mean())
    return Estimate(
        value=value,
        std_error=math.sqrt(value * (1.0 - value) / batch.n),
        method=EstimationMethod.PLAIN,
        acceptance=1.0,
        effective_samples=float(batch.n),
        n_samples=batch.n,
    )
