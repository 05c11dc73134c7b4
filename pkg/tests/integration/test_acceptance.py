"""Desk-scale reproduction runs.

These take minutes to an hour and are deselected by default; run them with
``pytest -m acceptance``.
"""

import math

import numpy as np
import pytest

from syndrome_resampler.analysis import (
    bootstrap_estimate,
    crossing_point,
    crossings,
    scaling_collapse,
)
from syndrome_resampler.codes import build_rotated, build_unrotated
from syndrome_resampler.exact import (
    decoder_class_table,
    enumerate_joint,
    exact_resampled_failure,
    rci,
    rci_sampled,
    trellis_joint,
)
from syndrome_resampler.models import (
    CgpsConfig,
    DecoderConfig,
    DecoderMethod,
    NoiseModel,
    ScalingPoint,
)
from syndrome_resampler.noise import run_batch
from syndrome_resampler.postselect import cgps_filter, combined_sr_cgps
from syndrome_resampler.resampling import (
    plain_estimate,
    resample_workflow,
    sr_estimate_batch,
    sr_variance,
)

pytestmark = pytest.mark.acceptance

THRESHOLD_GRID = [0.09 + 0.0025 * i for i in range(11)]


def _within(a, b) -> bool:
    """a <= b up to their bootstrap intervals."""
    return a.ci_low <= b.ci_high


def test_mwpm_threshold_collapse():
    """Test the MWPM threshold and exponent from an unrotated-code collapse."""
    points = []
    for d in (5, 7, 9):
        code = build_unrotated(d)
        for i, p in enumerate(THRESHOLD_GRID):
            batch = run_batch(code, NoiseModel(p=p), 200_000, seed=1000 * d + i, workers=4)
            est = plain_estimate(batch)
            points.append(ScalingPoint(p=p, d=d, p_l=est.value, sigma=est.std_error))

    fit = scaling_collapse(points, init=(0.1, 1.5), seed=0, workers=4)

    assert fit.p_th == pytest.approx(0.1015, abs=0.005)
    assert fit.nu == pytest.approx(1.49, abs=0.3)


def test_mld_threshold_collapse():
    """Test the MLD threshold from trellis coset probabilities on the same grid."""
    cfg = DecoderConfig(method=DecoderMethod.MLD)
    points = []
    for d in (5, 7, 9):
        code = build_unrotated(d)
        for i, p in enumerate(THRESHOLD_GRID):
            batch = run_batch(code, NoiseModel(p=p), 200_000, cfg, seed=2000 * d + i, workers=4)
            est = plain_estimate(batch)
            points.append(ScalingPoint(p=p, d=d, p_l=est.value, sigma=est.std_error))

    fit = scaling_collapse(points, init=(0.107, 1.5), seed=0, workers=4)

    assert 0.103 <= fit.p_th <= 0.113
    assert fit.nu == pytest.approx(1.5, abs=0.4)


@pytest.mark.parametrize(
    "alpha,window", [(1, (0.095, 0.125)), (2, (0.155, 0.20)), (3, (0.18, 0.235))]
)
def test_rci_crossings(alpha, window):
    """Test where the exact RCI curves of d = 3 and d = 5 cross."""
    grid = [0.06 + 0.005 * i for i in range(37)]
    small, large = build_rotated(3), build_rotated(5)
    curve3 = [(p, rci(enumerate_joint(small, NoiseModel(p=p)), alpha).value) for p in grid]
    curve5 = [(p, rci(trellis_joint(large, NoiseModel(p=p)), alpha).value) for p in grid]

    p_cross = crossing_point(curve3, curve5)

    assert window[0] <= p_cross <= window[1]


def test_rci_crossing_drifts_up_with_distance():
    """Test that the alpha = 1 crossing of d = 5/7 lies above that of d = 3/5.

    d = 7 has too many checks for a full table, so its curve is sampled.
    """
    grid = [0.08 + 0.005 * i for i in range(13)]
    small, middle, large = (build_rotated(d) for d in (3, 5, 7))
    curve3 = [(p, rci(enumerate_joint(small, NoiseModel(p=p)), 1).value) for p in grid]
    curve5 = [(p, rci(trellis_joint(middle, NoiseModel(p=p)), 1).value) for p in grid]
    curve7 = [
        (p, rci_sampled(large, NoiseModel(p=p), 1, 200_000, seed=i, workers=4).value)
        for i, p in enumerate(grid)
    ]

    lower = crossing_point(curve3, curve5)
    # Sampling noise can add spurious sign changes next to the true crossing.
    upper = float(np.median(crossings(curve5, curve7)))

    assert upper > lower


def test_resampling_lowers_failure_monotonically():
    """Test p_L(3) < p_L(2) < p_L(1) for exact-weight SR on one MWPM batch."""
    batch = run_batch(
        build_unrotated(5),
        NoiseModel(p=0.12),
        1_000_000,
        DecoderConfig(with_exact_prob=True),
        seed=4,
        workers=4,
    )
    e1, e2, e3 = (sr_estimate_batch(batch, a) for a in (1, 2, 3))

    assert e2.value + 3 * math.hypot(e1.std_error, e2.std_error) < e1.value
    assert e3.value + 3 * math.hypot(e2.std_error, e3.std_error) < e2.value


def test_sr_estimate_consistency_and_variance():
    """Test SR at alpha = 2 against the exact value and its variance prediction."""
    code = build_rotated(3)
    noise = NoiseModel(p=0.1)
    exact = exact_resampled_failure(
        enumerate_joint(code, noise), 2, decoder_class_table(code, noise)
    )
    cfg = DecoderConfig(with_exact_prob=True)

    big = sr_estimate_batch(run_batch(code, noise, 1_000_000, cfg, seed=5, workers=4), 2)
    assert abs(big.value - exact) < 3 * big.std_error

    values, predicted = [], []
    for seed in range(200):
        batch = run_batch(code, noise, 10_000, cfg, seed=10_000 + seed)
        values.append(sr_estimate_batch(batch, 2).value)
        predicted.append(sr_variance(batch.p_s, batch.failures, 2))
    assert np.mean(predicted) == pytest.approx(np.var(values, ddof=1), rel=0.3)


def test_estimator_ordering():
    """Test combined <= SR, combined <= CGPS <= MWPM at every p on a d = 5 code.

    Comparisons use 67% bootstrap intervals; bare MWPM is the largest point estimate.
    """
    code = build_rotated(5)
    cfg = CgpsConfig(confidence=2 / 5, distance=5)
    estimators = {
        "mwpm": lambda b, rng: plain_estimate(b),
        "sr": lambda b, rng: resample_workflow(b, 2, rng=rng)[0],
        "cgps": lambda b, rng: cgps_filter(b, cfg)[1],
        "combined": lambda b, rng: combined_sr_cgps(b, 2, cfg, rng=rng),
    }
    for i, p in enumerate((0.08, 0.10, 0.12, 0.14, 0.16)):
        batch = run_batch(
            code, NoiseModel(p=p), 200_000, DecoderConfig(with_gap=True), seed=i, workers=4
        )
        est = {
            name: bootstrap_estimate(batch, fn, level=0.67, seed=100 * i + k)
            for k, (name, fn) in enumerate(estimators.items())
        }

        assert _within(est["combined"], est["sr"])
        assert _within(est["combined"], est["cgps"])
        assert _within(est["cgps"], est["mwpm"])
        assert _within(est["sr"], est["mwpm"])
        assert est["mwpm"].value == max(e.value for e in est.values())


def test_acceptance_grows_faster_than_estimate_settles():
    """Test that the SR estimate settles while its acceptance is still well below one."""
    code = build_rotated(5)
    sizes = [10**k for k in range(3, 8)]
    estimates = []
    for n in sizes:
        # Same seed: each batch extends the previous one.
        batch = run_batch(code, NoiseModel(p=0.12), n, seed=8, workers=4)
        estimates.append(resample_workflow(batch, 2, seed=8)[0])

    acceptance = np.array([e.acceptance for e in estimates])
    values = np.array([e.value for e in estimates])
    assert np.all(np.diff(acceptance) >= 0)
    assert acceptance[-1] > 0.9
    change = np.abs(np.diff(values)) / values[:-1]
    settled = (change < 0.1) & (acceptance[1:] < 0.9)
    assert settled.any(), (acceptance.tolist(), values.tolist())
