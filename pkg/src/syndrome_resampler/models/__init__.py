"""Domain models shared by every subpackage."""

from .code import (
    BoundaryTag,
    CheckStatus,
    CodeSpec,
    Layout,
    QubitSite,
    ValidationCheck,
    ValidationReport,
)
from .distributions import (
    EmpiricalPowerDistribution,
    JointDistribution,
    JointMethod,
    PowerDistribution,
    RciValue,
    index_to_key,
    normalize_key,
    key_to_index,
)
from .estimates import (
    CgpsConfig,
    Estimate,
    EstimationMethod,
    SampleBounds,
    ScalingFit,
    ScalingPoint,
)
from .experiment import (
    DecoderConfig,
    DecoderMethod,
    ExperimentConfig,
    ExternalRecord,
    MatchingBackend,
)
from .noise import MISSING, LogicalClass, NoiseModel, SampleBatch, SampleRecord

__all__ = [
    "BoundaryTag",
    "CheckStatus",
    "CodeSpec",
    "Layout",
    "QubitSite",
    "ValidationCheck",
    "ValidationReport",
    "EmpiricalPowerDistribution",
    "JointDistribution",
    "JointMethod",
    "PowerDistribution",
    "RciValue",
    "index_to_key",
    "key_to_index",
    "normalize_key",
    "CgpsConfig",
    "Estimate",
    "EstimationMethod",
    "SampleBounds",
    "ScalingFit",
    "ScalingPoint",
    "DecoderConfig",
    "DecoderMethod",
    "ExperimentConfig",
    "ExternalRecord",
    "MatchingBackend",
    "MISSING",
    "LogicalClass",
    "NoiseModel",
    "SampleBatch",
    "SampleRecord",
]
