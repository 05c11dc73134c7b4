"""Percentile bootstrap intervals."""

import logging
import math
from collections.abc import Callable

import numpy as np

from syndrome_resampler.analysis.base import DegenerateInputError
from syndrome_resampler.models import Estimate, SampleBatch
from syndrome_resampler.resampling.base import EmptyAfterDiscardError

logger = logging.getLogger(__name__)

MIN_RESAMPLES = 100
DEFAULT_RESAMPLES = 200
DEFAULT_LEVEL = 0.67

BatchEstimator = Callable[[SampleBatch, np.random.Generator], Estimate]


def resample_batch(batch: SampleBatch, rng: np.random.Generator) -> SampleBatch:
    """Batch of the same size drawn from ``batch`` records with replacement."""
    idx = rng.integers(0, batch.n, size=batch.n)

    def _take(column: np.ndarray | None) -> np.ndarray | None:
        return None if column is None else column[idx]

    return batch.model_copy(
        update={
            "syndrome_index": batch.syndrome_index[idx],
            "failures": batch.failures[idx],
            "decoder_class": _take(batch.decoder_class),
            "w_mwpm": _take(batch.w_mwpm),
            "w_comp": _take(batch.w_comp),
            "gap": _take(batch.gap),
            "p_s": _take(batch.p_s),
        }
    )


def bootstrap_ci(
    data: np.ndarray | None = None,
    statistic: Callable[[np.ndarray], float] = np.mean,
    estimator: Callable[[np.random.Generator], float] | None = None,
    n_resamples: int = 1000,
    level: float = DEFAULT_LEVEL,
    seed: int = 0,
) -> tuple[float, float]:
    """Percentile interval at ``level`` over ``n_resamples`` bootstrap replicates.

    Either pass ``data`` (resampled with replacement and reduced by ``statistic``)
    or an ``estimator`` closure that draws its own replicate from the generator it
    is given. An estimator may return NaN for a replicate it cannot evaluate; such
    replicates are dropped, and more than half of them is an error. The result
    depends only on the inputs and ``seed``.
    """
    if n_resamples < MIN_RESAMPLES:
        raise DegenerateInputError(f"need at least {MIN_RESAMPLES} resamples, got {n_resamples}")
    if not 0.0 < level < 1.0:
        raise DegenerateInputError(f"level must lie in (0, 1), got {level}")
    rng = np.random.Generator(np.random.Philox(seed))

    if estimator is None:
        if data is None:
            raise DegenerateInputError("pass either data or an estimator")
        values = np.asarray(data)
        if values.size == 0:
            raise DegenerateInputError("cannot bootstrap an empty sample")
        n = len(values)
        replicates = np.array(
            [statistic(values[rng.integers(0, n, size=n)]) for _ in range(n_resamples)]
        )
    else:
        replicates = np.array([estimator(rng) for _ in range(n_resamples)], dtype=np.float64)

    finite = replicates[np.isfinite(replicates)]
    if 2 * len(finite) < n_resamples:
        raise DegenerateInputError(
            f"only {len(finite)} of {n_resamples} bootstrap replicates could be evaluated"
        )
    tail = (1.0 - level) / 2.0
    low, high = np.quantile(finite, [tail, 1.0 - tail])
    return float(low), float(high)


def bootstrap_estimate(
    batch: SampleBatch,
    estimator: BatchEstimator,
    n_resamples: int = DEFAULT_RESAMPLES,
    level: float = DEFAULT_LEVEL,
    seed: int = 0,
    point: Estimate | None = None,
) -> Estimate:
    """Run ``estimator`` on ``batch`` and attach a percentile bootstrap interval.

    Each replicate redraws the records with replacement and reruns the whole
    estimator, discard stage and resampling draws included, so the interval
    carries the noise of the resampled draws as well as that of the batch. Pass
    ``point`` when the estimate on ``batch`` itself is already known.
    """
    point_seq, boot_seq = np.random.SeedSequence(seed).spawn(2)
    if point is None:
        point = estimator(batch, np.random.Generator(np.random.Philox(point_seq)))

    def _replicate(rng: np.random.Generator) -> float:
        try:
            return estimator(resample_batch(batch, rng), rng).value
        except EmptyAfterDiscardError:
            return math.nan

    low, high = bootstrap_ci(
        estimator=_replicate,
        n_resamples=n_resamples,
        level=level,
        seed=int(boot_seq.generate_state(1)[0]),
    )
    logger.debug(
        "%s bootstrap: %.6g in [%.6g, %.6g] at level %.2f",
        point.method.value,
        point.value,
        low,
        high,
        level,
    )
    return point.model_copy(update={"ci_low": low, "ci_high": high, "ci_level": level})
