"""Tests for the exact-weight and empirical syndrome resampling estimators."""

import math

import numpy as np
import pytest

from syndrome_resampler.analysis import bootstrap_estimate
from syndrome_resampler.exact import decoder_class_table, enumerate_joint, exact_resampled_failure
from syndrome_resampler.models import DecoderConfig, EstimationMethod, NoiseModel
from syndrome_resampler.noise import run_batch
from syndrome_resampler.resampling import (
    EmptyAfterDiscardError,
    EmptyBatchError,
    EstimatorDomainError,
    acceptance_rate,
    empirical_power,
    good_power,
    plain_estimate,
    resample_indices,
    resample_workflow,
    sample_bounds,
    sr_estimate,
    sr_estimate_batch,
    sr_variance,
    sr_weights,
)
from tests.helpers import make_batch


def test_sr_estimate_two_records():
    """Test the weighted mean on two records with known probabilities."""
    estimate = sr_estimate([0.5, 0.25], [0, 1], alpha=2)

    assert estimate.value == pytest.approx(1 / 3)
    assert estimate.method is EstimationMethod.SR_EXACT
    assert estimate.effective_samples == pytest.approx(1.5**2 / 1.25)


def test_sr_estimate_alpha_one_is_plain_mean():
    """Test that alpha = 1 reduces to the unweighted failure rate."""
    probs = [0.1, 0.2, 0.3, 0.4]
    x = [1, 0, 0, 1]

    estimate = sr_estimate(probs, x, alpha=1)

    assert estimate.value == pytest.approx(0.5)
    assert estimate.effective_samples == pytest.approx(4.0)
    assert sr_variance(probs, x, 1) == pytest.approx(0.25 / 4)


def test_sr_weights_survive_tiny_probabilities():
    """Test that weights stay finite for probabilities far below float range at large alpha."""
    weights = sr_weights([1e-200, 1e-210], alpha=5)

    assert weights[0] == 1.0
    assert 0.0 <= weights[1] < 1.0


def test_sr_estimate_domain_errors():
    """Test the rejected inputs of the weighted estimator."""
    with pytest.raises(EmptyBatchError):
        sr_estimate([], [], 2)
    with pytest.raises(EstimatorDomainError):
        sr_estimate([0.5, 0.0], [0, 1], 2)
    with pytest.raises(EstimatorDomainError):
        sr_estimate([0.5], [0], 0.5)
    with pytest.raises(EstimatorDomainError):
        sr_estimate([0.5, 0.25], [0], 2)


def test_sr_estimate_batch_needs_probabilities():
    """Test that a batch without P(s) cannot be reweighted exactly."""
    batch = make_batch(["00", "01"], [0, 1])

    with pytest.raises(EstimatorDomainError):
        sr_estimate_batch(batch, 2)


def test_plain_estimate():
    """Test the binomial baseline."""
    estimate = plain_estimate(make_batch(["00", "00", "01", "02"], [0, 0, 1, 1]))

    assert estimate.value == 0.5
    assert estimate.std_error == pytest.approx(math.sqrt(0.25 / 4))
    assert estimate.acceptance == 1.0


def test_sr_exact_matches_enumeration(rotated3):
    """Test reweighted Monte Carlo against the exact resampled failure rate."""
    noise = NoiseModel(p=0.1)
    exact = exact_resampled_failure(
        enumerate_joint(rotated3, noise), 2, decoder_class_table(rotated3, noise)
    )
    batch = run_batch(rotated3, noise, 40000, DecoderConfig(with_exact_prob=True), seed=21)

    estimate = sr_estimate_batch(batch, 2)

    assert abs(estimate.value - exact) < 5 * estimate.std_error


def test_good_power_small_counts():
    """Test Good's estimator on small counts."""
    assert good_power(np.array([3, 1]), 4, 2).tolist() == [0.5, 0.0]
    assert good_power(np.array([3]), 2, 3).tolist() == [0.0]


def test_good_power_large_alpha_uses_log_gamma():
    """Test the log-gamma branch against exact binomial ratios."""
    out = good_power(np.array([40, 10]), 50, 33)

    assert out[0] == pytest.approx(math.comb(40, 33) / math.comb(50, 33), rel=1e-10)
    assert out[1] == 0.0


def test_good_power_is_unbiased_over_multinomial_draws():
    probabilities = np.array([0.6, 0.3, 0.1])
    counts = np.random.default_rng(6).multinomial(50, probabilities, size=100_000)

    values = good_power(counts, 50, 2)
    mean = values.mean(axis=0)
    se = values.std(axis=0, ddof=1) / math.sqrt(len(values))

    assert np.all(np.abs(mean - probabilities**2) < 3 * se)


def test_empirical_power():
    """Test the estimated power distribution and its normalisation."""
    dist = empirical_power({"00": 3, "01": 1}, 4, 2)

    assert dist.as_dict() == {"00": 0.5, "01": 0.0}
    assert dist.q.tolist() == [1.0, 0.0]
    assert not dist.is_empty


def test_empirical_power_all_unique_is_empty():
    """Test that no repeated syndrome leaves an empty estimate."""
    dist = empirical_power({"00": 1, "01": 1, "02": 1}, 3, 2)

    assert dist.is_empty
    assert dist.q.tolist() == [0.0, 0.0, 0.0]


def test_empirical_power_domain_errors():
    """Test non-integer alpha and inconsistent counts."""
    with pytest.raises(EstimatorDomainError):
        empirical_power({"00": 3}, 3, 1.5)
    with pytest.raises(EstimatorDomainError):
        empirical_power({"00": 3}, 4, 2)


def test_acceptance_rate():
    """Test the fraction of samples whose syndrome survives the discard."""
    batch = make_batch(["00", "00", "00", "01"], [0, 0, 0, 1])

    assert acceptance_rate(batch, 2) == 0.75
    assert acceptance_rate(batch, 1) == 1.0


def test_workflow_alpha_one_is_identity():
    """Test that alpha = 1 keeps every record exactly once."""
    batch = make_batch(["00", "01", "02", "01"], [0, 1, 0, 1])

    estimate, picks = resample_workflow(batch, 1)

    assert picks.tolist() == [0, 1, 2, 3]
    assert estimate.value == 0.5
    assert estimate.acceptance == 1.0


def test_workflow_single_syndrome():
    """Test that one repeated syndrome is accepted in full."""
    batch = make_batch(["00"] * 6, [1] * 6)

    estimate, picks = resample_workflow(batch, 2, seed=3)

    assert estimate.value == 1.0
    assert estimate.acceptance == 1.0
    assert len(picks) == 6


def test_workflow_discards_rare_syndromes():
    """Test that picks only land on syndromes seen at least alpha times."""
    batch = make_batch(["00", "01", "00", "02", "00"], [0, 1, 0, 1, 0])

    estimate, picks = resample_workflow(batch, 2, n_tilde=50, seed=1)

    assert set(picks.tolist()) <= {0, 2, 4}
    assert estimate.value == 0.0
    assert estimate.acceptance == pytest.approx(0.6)
    assert estimate.metadata["n_tilde"] == 50
    assert estimate.metadata["n_tilde_rule"] == "given"


def test_workflow_draw_frequencies():
    """Test that syndromes are drawn in proportion to Good's estimate."""
    # Q-hat_2 = (C(4,2), C(2,2)) / 7 = (6/7, 1/7)
    batch = make_batch(["00"] * 4 + ["01"] * 2, [0] * 4 + [1] * 2)

    estimate, _ = resample_workflow(batch, 2, n_tilde=70000, seed=5)

    assert estimate.value == pytest.approx(1 / 7, abs=0.01)


def test_workflow_is_seeded():
    """Test that the seed fixes the draw."""
    batch = make_batch(["00", "01", "00", "01", "02", "00"], [0, 1, 1, 0, 1, 0])

    _, a = resample_workflow(batch, 2, seed=8)
    _, b = resample_workflow(batch, 2, seed=8)
    c, acceptance = resample_indices(batch, 2, rng=np.random.default_rng(8))

    assert np.array_equal(a, b)
    assert len(c) == len(a)
    assert acceptance == pytest.approx(5 / 6)


@pytest.mark.parametrize("name", ["rotated3", "unrotated3"])
def test_workflow_matches_exact_resampled_failure(request, name):
    """Test the empirical workflow at alpha = 2 against the exact resampled failure rate."""
    code = request.getfixturevalue(name)
    noise = NoiseModel(p=0.1)
    exact = exact_resampled_failure(
        enumerate_joint(code, noise), 2, decoder_class_table(code, noise)
    )
    batch = run_batch(code, noise, 200_000, seed=22, workers=2)

    estimate, _ = resample_workflow(batch, 2, seed=3)

    assert abs(estimate.value - exact) < 4 * math.sqrt(2) * estimate.std_error + 1e-3


def test_workflow_std_error_is_a_lower_bound(rotated3):
    """Test that the batch bootstrap interval is wider than the draw-only error suggests."""
    batch = run_batch(rotated3, NoiseModel(p=0.1), 2000, seed=23)

    point, _ = resample_workflow(batch, 2, seed=4)
    interval = bootstrap_estimate(
        batch,
        lambda b, rng: resample_workflow(b, 2, rng=rng)[0],
        n_resamples=400,
        seed=4,
        point=point,
    )

    assert point.metadata["std_error_is_lower_bound"] is True
    assert interval.ci_high - interval.ci_low > 1.94 * point.std_error


def test_workflow_all_unique_is_empty():
    """Test that a batch with no repeated syndrome cannot be resampled at alpha = 2."""
    batch = make_batch(["00", "01", "02"], [0, 1, 0])

    with pytest.raises(EmptyAfterDiscardError) as exc_info:
        resample_workflow(batch, 2)

    assert exc_info.value.stage == "resample"


def test_sample_bounds(rotated3):
    """Test the three sample-size bounds."""
    bounds = sample_bounds(2, rotated3, NoiseModel(p=0.1))
    half = sample_bounds(2, rotated3, NoiseModel(p=0.5))

    assert bounds.generic == pytest.approx(2 / 0.9**9)
    assert bounds.low_p == pytest.approx(2 * math.exp(0.9))
    assert bounds.low_p == pytest.approx(4.92, abs=0.01)
    assert half.high_p == 512
