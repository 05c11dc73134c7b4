"""Tests for exact joint tables, power distributions and RCI."""

import math

import numpy as np
import pytest

from syndrome_resampler.codes import build_rotated, build_unrotated
from syndrome_resampler.exact import (
    ClassMapError,
    DistributionDomainError,
    ResourceError,
    coset_probabilities,
    coset_probability,
    decoder_class_table,
    enumerate_joint,
    exact_resampled_failure,
    joint_distribution,
    mld_class_map,
    power_distribution,
    rci,
    rci_sampled,
    renyi_entropy,
    trellis_joint,
)
from syndrome_resampler.models import (
    DecoderMethod,
    JointDistribution,
    JointMethod,
    LogicalClass,
    NoiseModel,
)
from syndrome_resampler.noise import syndromes_of
from tests.helpers import brute_force_tables


def _two_point(p_a: float, p_b: float) -> JointDistribution:
    """Joint table with P(s0) = p_a (all class I) and P(s1) = p_b (all class X)."""
    table = np.zeros((2, 2))
    table[0, 0] = p_a
    table[1, 1] = p_b
    return JointDistribution(
        code_id="toy", p=0.1, num_checks=1, method=JointMethod.ENUMERATION, table=table
    )


@pytest.mark.parametrize("p", [0.0, 0.05, 0.2, 0.5])
def test_joint_mass_is_one(rotated3, p):
    """Test that the joint table sums to one."""
    joint = enumerate_joint(rotated3, NoiseModel(p=p))

    assert joint.total_mass == pytest.approx(1.0, abs=1e-12)


def test_zero_noise_joint(rotated3):
    """Test that p = 0 puts all mass on (trivial syndrome, class I)."""
    joint = joint_distribution(rotated3, NoiseModel(p=0.0))

    assert joint["00"] == (1.0, 0.0)
    assert list(joint.supported) == [0]


def test_trivial_syndrome_probability(rotated3):
    """Test P(s0, l) against the weight enumerators of the stabilizer group and its coset."""
    p, n = 0.1, rotated3.n
    hx = rotated3.x_check_matrix().astype(np.int64)
    combos = (np.arange(16)[:, None] >> np.arange(4)) & 1
    group = (combos @ hx) % 2
    coset = group ^ rotated3.x_logical_mask().astype(np.int64)

    def _mass(patterns):
        w = patterns.sum(axis=1)
        return float((p**w * (1 - p) ** (n - w)).sum())

    p_i, p_x = coset_probability(rotated3, NoiseModel(p=p), np.zeros(4, dtype=np.uint8))

    assert p_i == pytest.approx(_mass(group), rel=1e-12)
    assert p_x == pytest.approx(_mass(coset), rel=1e-12)


@pytest.mark.parametrize("fixture", ["rotated3", "unrotated3"])
def test_enumeration_matches_trellis(request, fixture):
    """Test that the two exact methods agree."""
    code = request.getfixturevalue(fixture)
    noise = NoiseModel(p=0.13)

    by_enumeration = enumerate_joint(code, noise)
    by_trellis = trellis_joint(code, noise)
    brute, _ = brute_force_tables(code, 0.13)

    assert by_trellis.method is JointMethod.TRELLIS
    assert np.allclose(by_enumeration.table, brute, rtol=1e-12, atol=0)
    assert np.allclose(by_trellis.table, brute, rtol=1e-10, atol=0)


def test_enumeration_budget(rotated5):
    """Test that enumeration beyond its qubit budget is refused."""
    with pytest.raises(ResourceError):
        enumerate_joint(rotated5, NoiseModel(p=0.1), max_qubits=20)


def test_trellis_joint_unrotated_d5():
    """Test the 2^20-syndrome table against per-syndrome coset probabilities."""
    code = build_unrotated(5)
    noise = NoiseModel(p=0.1)
    errors = (np.random.default_rng(3).random((20, code.n)) < 0.1).astype(np.uint8)
    syndromes = syndromes_of(code, errors)
    indices = syndromes.astype(np.int64) @ (1 << np.arange(code.num_checks, dtype=np.int64))

    joint = trellis_joint(code, noise)

    assert joint.table.shape == (1 << 20, 2)
    assert joint.total_mass == pytest.approx(1.0, abs=1e-9)
    assert np.allclose(
        joint.table[indices], coset_probabilities(code, noise, syndromes), rtol=1e-9, atol=0
    )


def test_power_distribution_two_point():
    """Test Q_alpha on a two-syndrome distribution."""
    joint = _two_point(0.8, 0.2)

    q2 = power_distribution(joint, 2)
    q_inf = power_distribution(joint, math.inf)

    assert q2.probabilities[0] == pytest.approx(16 / 17)
    assert q2.probabilities[1] == pytest.approx(1 / 17)
    assert q2.normalizer == pytest.approx(0.68)
    assert q_inf.probabilities.tolist() == [1.0, 0.0]
    assert q_inf.log2_normalizer == 0.0


def test_power_distribution_alpha_zero_ignores_unsupported():
    """Test that alpha = 0 is uniform over supported syndromes only."""
    table = np.zeros((4, 2))
    table[0, 0] = 0.9
    table[3, 1] = 0.1
    joint = JointDistribution(
        code_id="toy", p=0.1, num_checks=2, method=JointMethod.ENUMERATION, table=table
    )

    q = power_distribution(joint, 0)

    assert q.probabilities.tolist() == pytest.approx([0.5, 0.0, 0.0, 0.5])


def test_power_distribution_infinite_ties():
    """Test that tied modes share Q_inf uniformly."""
    q = power_distribution(_two_point(0.5, 0.5), math.inf)

    assert q.probabilities.tolist() == [0.5, 0.5]
    assert q.log2_normalizer == pytest.approx(1.0)


def test_power_distribution_large_alpha(rotated3):
    """Test that large alpha concentrates on the trivial syndrome without underflow."""
    joint = enumerate_joint(rotated3, NoiseModel(p=0.05))

    q = power_distribution(joint, 400)

    assert q.probabilities[0] == pytest.approx(1.0)
    assert math.isfinite(q.log2_normalizer)


def test_negative_alpha_is_rejected():
    """Test that alpha < 0 is a domain error."""
    with pytest.raises(DistributionDomainError):
        power_distribution(_two_point(0.5, 0.5), -1)
    with pytest.raises(DistributionDomainError):
        rci(_two_point(0.5, 0.5), math.inf)


@pytest.mark.parametrize("alpha", [0.5, 1, 2, 10])
def test_rci_limits(rotated3, alpha):
    """Test RCI at p = 0 (one logical bit) and p = 0.5 (nothing left)."""
    clean = enumerate_joint(rotated3, NoiseModel(p=0.0))
    noisy = enumerate_joint(rotated3, NoiseModel(p=0.5))

    assert rci(clean, alpha).value == pytest.approx(1.0, abs=1e-12)
    assert rci(noisy, alpha).value == pytest.approx(0.0, abs=1e-9)


def test_rci_raw_flag(rotated3):
    """Test that the raw form drops the additive k."""
    joint = enumerate_joint(rotated3, NoiseModel(p=0.1))

    shifted = rci(joint, 2)
    raw = rci(joint, 2, raw=True)

    assert raw.raw and not shifted.raw
    assert shifted.value - raw.value == pytest.approx(1.0)
    assert rci(enumerate_joint(rotated3, NoiseModel(p=0.0)), 2, raw=True).value == 0.0


def test_rci_decreases_with_noise(rotated3):
    """Test that RCI falls as p grows below threshold."""
    values = [rci(enumerate_joint(rotated3, NoiseModel(p=p)), 2).value for p in (0.01, 0.05, 0.1)]

    assert values[0] > values[1] > values[2]
    assert all(0.0 <= v <= 1.0 for v in values)


def test_rci_sampled_agrees_with_exact(rotated3):
    """Test the sampled RCI against the exact value."""
    noise = NoiseModel(p=0.1)
    exact = rci(enumerate_joint(rotated3, noise), 2).value

    sampled = rci_sampled(rotated3, noise, 2, 20000, seed=4)

    assert sampled.method == "sampled"
    assert abs(sampled.value - exact) < 5 * sampled.std_error + 1e-3


def test_rci_sampled_needs_two_samples(rotated3):
    """Test that a single sample is refused."""
    with pytest.raises(DistributionDomainError):
        rci_sampled(rotated3, NoiseModel(p=0.1), 2, 1)


def test_renyi_entropy_two_point():
    """Test Renyi entropies of a two-point distribution."""
    joint = _two_point(0.5, 0.5)

    assert renyi_entropy(joint, 1) == pytest.approx(1.0)
    assert renyi_entropy(joint, 2) == pytest.approx(1.0)
    assert renyi_entropy(_two_point(0.8, 0.2), math.inf) == pytest.approx(-math.log2(0.8))


def test_mld_minimises_resampled_failure(rotated3):
    """Test that the MLD class map does at least as well as MWPM at every alpha."""
    noise = NoiseModel(p=0.1)
    joint = enumerate_joint(rotated3, noise)
    mwpm = decoder_class_table(rotated3, noise, DecoderMethod.MWPM)
    mld = mld_class_map(joint)

    for alpha in (0, 1, 2, 5, math.inf):
        assert exact_resampled_failure(joint, alpha, mld) <= exact_resampled_failure(
            joint, alpha, mwpm
        ) + 1e-15


def test_resampled_failure_two_point():
    """Test the resampled failure of a wrong class assignment."""
    joint = _two_point(0.8, 0.2)

    wrong = {"00": LogicalClass.I, "01": LogicalClass.I}

    assert exact_resampled_failure(joint, 2, wrong) == pytest.approx(1 / 17)
    assert exact_resampled_failure(joint, math.inf, wrong) == 0.0


def test_resampled_failure_at_zero_noise(rotated3):
    """Test that p = 0 gives zero failure for the MLD map."""
    joint = enumerate_joint(rotated3, NoiseModel(p=0.0))

    assert exact_resampled_failure(joint, 2, mld_class_map(joint)) == 0.0


def test_class_map_must_cover_support():
    """Test that a class map missing a supported syndrome is rejected."""
    with pytest.raises(ClassMapError):
        exact_resampled_failure(_two_point(0.8, 0.2), 2, {"00": LogicalClass.I})
    with pytest.raises(ClassMapError):
        exact_resampled_failure(_two_point(0.8, 0.2), 2, np.zeros(3, dtype=np.int64))


def test_mld_class_map_ties():
    """Test that tied cosets map to class I."""
    table = np.array([[0.25, 0.25], [0.1, 0.4]])
    joint = JointDistribution(
        code_id="toy", p=0.1, num_checks=1, method=JointMethod.ENUMERATION, table=table
    )

    assert mld_class_map(joint).tolist() == [0, 1]


def test_auto_method_prefers_trellis_for_large_codes():
    """Test that codes beyond the enumeration budget go through the trellis."""
    code = build_rotated(7)  # n = 49, m = 24

    with pytest.raises(ResourceError):
        joint_distribution(code, NoiseModel(p=0.1))


@pytest.fixture(scope="module")
def unrotated5_joints():
    code = build_unrotated(5)
    return {p: trellis_joint(code, NoiseModel(p=p)) for p in (0.05, 0.1, 0.2)}


@pytest.mark.parametrize("p", [0.05, 0.1, 0.2])
def test_mld_resampled_failure_falls_with_alpha(unrotated5_joints, p):
    """Test that sharpening the syndrome distribution never raises the MLD failure rate."""
    joint = unrotated5_joints[p]
    mld = mld_class_map(joint)

    rates = [exact_resampled_failure(joint, a, mld) for a in (1, 1.5, 2, 3, 5, 10, math.inf)]

    assert np.all(np.diff(rates) <= 1e-12), rates


def test_trivial_syndrome_weight_grows_with_alpha(unrotated5_joints):
    """Test Q_alpha of the trivial syndrome at p = 0.2 for alpha = 1, 2, 3."""
    joint = unrotated5_joints[0.2]

    q0 = [power_distribution(joint, a)["000000"] for a in (1, 2, 3)]

    assert q0[0] < q0[1] < q0[2]
    assert q0 == pytest.approx([1.35e-4, 8.4e-3, 0.141], rel=0.05)
