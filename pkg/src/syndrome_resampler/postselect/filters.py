"""Trivial-syndrome post-selection, complementary-gap post-selection and SR + CGPS.

A record is kept by CGPS iff (1 - gap/d) <= c. The comparison is done in exact
rational arithmetic, so equal syndromes (equal gaps) always share a decision and
the boundary case (1 - gap/d) == c is kept.
"""

import logging
import math
from fractions import Fraction

import numpy as np

from syndrome_resampler.models import CgpsConfig, Estimate, EstimationMethod, SampleBatch
from syndrome_resampler.postselect.base import (
    EmptyAfterDiscardError,
    EmptyBatchError,
    MissingGapError,
)
from syndrome_resampler.resampling import resample_indices

logger = logging.getLogger(__name__)

MAX_CONFIDENCE_DENOMINATOR = 10**6


def _mean_estimate(
    x: np.ndarray, method: EstimationMethod, acceptance: float, n: int, **extra
) -> Estimate:
    value = float(x.mean())
    return Estimate(
        value=value,
        std_error=math.sqrt(value * (1.0 - value) / len(x)),
        method=method,
        acceptance=acceptance,
        effective_samples=float(len(x)),
        n_samples=n,
        **extra,
    )


def ps_estimate(batch: SampleBatch) -> Estimate:
    """Failure rate over trivial-syndrome records only."""
    if batch.n == 0:
        raise EmptyBatchError("batch is empty")
    trivial = batch.trivial_key_index
    kept = (
        np.flatnonzero(batch.syndrome_index == trivial)
        if trivial is not None
        else np.empty(0, dtype=np.int64)
    )
    if len(kept) == 0:
        raise EmptyAfterDiscardError("ps", "batch holds no trivial-syndrome records")
    return _mean_estimate(
        batch.failures[kept].astype(np.float64),
        EstimationMethod.PS,
        len(kept) / batch.n,
        batch.n,
    )


def cgps_keep_mask(gaps: np.ndarray, cfg: CgpsConfig) -> np.ndarray:
    """Keep mask for (1 - gap/d) <= c, i.e. (d - gap) * den <= num * d."""
    c = Fraction(cfg.confidence).limit_denominator(MAX_CONFIDENCE_DENOMINATOR)
    gaps = np.asarray(gaps, dtype=np.int64)
    return (cfg.distance - gaps) * c.denominator <= c.numerator * cfg.distance


def _require_gaps(batch: SampleBatch) -> np.ndarray:
    if not batch.has_gaps:
        raise MissingGapError("CGPS needs a complementary gap on every record")
    return batch.gap


def cgps_filter(batch: SampleBatch, cfg: CgpsConfig) -> tuple[np.ndarray, Estimate]:
    """Kept record indices and the failure rate over them.

    Raises:
        MissingGapError: If any record lacks a gap.
        EmptyAfterDiscardError: If nothing is kept.
    """
    if batch.n == 0:
        raise EmptyBatchError("batch is empty")
    kept = np.flatnonzero(cgps_keep_mask(_require_gaps(batch), cfg))
    if len(kept) == 0:
        raise EmptyAfterDiscardError("cgps", f"CGPS at c={cfg.confidence} discarded every record")
    estimate = _mean_estimate(
        batch.failures[kept].astype(np.float64),
        EstimationMethod.CGPS,
        len(kept) / batch.n,
        batch.n,
        metadata={"confidence": cfg.confidence, "distance": cfg.distance},
    )
    return kept, estimate


def combined_sr_cgps(
    batch: SampleBatch,
    alpha: int,
    cfg: CgpsConfig,
    n_tilde: int | None = None,
    rng: np.random.Generator | None = None,
    seed: int = 0,
) -> Estimate:
    """Resample first, then apply CGPS to the drawn records.

    Acceptance is the product of the discard-stage acceptance and the CGPS keep
    fraction of the drawn set. As for ``resample_workflow``, ``std_error`` is a
    lower bound.
    """
    gaps = _require_gaps(batch)
    picks, sr_acceptance = resample_indices(batch, alpha, n_tilde, rng, seed)
    kept = picks[cgps_keep_mask(gaps[picks], cfg)]
    if len(kept) == 0:
        raise EmptyAfterDiscardError(
            "cgps", f"CGPS at c={cfg.confidence} discarded every resampled record"
        )
    cgps_acceptance = len(kept) / len(picks)
    logger.debug(
        "combined SR+CGPS: %d drawn, %d kept (alpha=%s, c=%s)",
        len(picks),
        len(kept),
        alpha,
        cfg.confidence,
    )
    return _mean_estimate(
        batch.failures[kept].astype(np.float64),
        EstimationMethod.COMBINED,
        sr_acceptance * cgps_acceptance,
        batch.n,
        alpha=float(alpha),
        metadata={
            "confidence": cfg.confidence,
            "distance": cfg.distance,
            "sr_acceptance": sr_acceptance,
            "cgps_acceptance": cgps_acceptance,
            "n_tilde": int(len(picks)),
            "with_replacement": True,
            "std_error_is_lower_bound": True,
        },
    )
