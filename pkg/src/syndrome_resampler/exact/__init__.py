"""Exact syndrome distributions and the quantities derived from them."""

from .base import ClassMapError, DistributionDomainError, ExactError, ResourceError
from .joint import (
    MAX_ENUMERATION_QUBITS,
    coset_probabilities,
    coset_probability,
    enumerate_joint,
    joint_distribution,
    trellis_joint,
)
from .power import (
    decoder_class_bits,
    decoder_class_table,
    exact_resampled_failure,
    mld_class_map,
    power_distribution,
    rci,
    rci_sampled,
    renyi_entropy,
)

__all__ = [
    "ClassMapError",
    "DistributionDomainError",
    "ExactError",
    "ResourceError",
    "MAX_ENUMERATION_QUBITS",
    "coset_probabilities",
    "coset_probability",
    "enumerate_joint",
    "joint_distribution",
    "trellis_joint",
    "decoder_class_bits",
    "decoder_class_table",
    "exact_resampled_failure",
    "mld_class_map",
    "power_distribution",
    "rci",
    "rci_sampled",
    "renyi_entropy",
]
