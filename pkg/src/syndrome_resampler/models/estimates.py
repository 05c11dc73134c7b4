"""Estimator outputs and finite-size scaling fits."""

from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field


class EstimationMethod(str, Enum):
    PLAIN = "plain"
    SR_EXACT = "sr_exact"
    SR_EMPIRICAL = "sr_empirical"
    PS = "ps"
    CGPS = "cgps"
    COMBINED = "combined"


class Estimate(BaseModel):
    """A logical error rate with its uncertainty and bookkeeping."""

    value: float = Field(ge=0.0, le=1.0)
    std_error: float = Field(ge=0.0)
    method: EstimationMethod
    alpha: float | None = None
    acceptance: float = Field(default=1.0, ge=0.0, le=1.0)
    effective_samples: float = Field(default=0.0, ge=0.0)
    n_samples: int = 0
    ci_low: float | None = None
    ci_high: float | None = None
    ci_level: float | None = None
    metadata: dict[str, Any] = Field(default_factory=dict)

    @property
    def expectation(self) -> float:
        """Expectation of the logical observable, 1 - 2 p_L."""
        return 1.0 - 2.0 * self.value

    @property
    def has_ci(self) -> bool:
        return self.ci_low is not None and self.ci_high is not None

    @property
    def expectation_error(self) -> float:
        return 2.0 * self.std_error


class CgpsConfig(BaseModel):
    """Complementary-gap post-selection: discard when (1 - gap/d) > c."""

    model_config = ConfigDict(frozen=True)

    confidence: float = Field(ge=0.0, le=1.0)
    distance: int = Field(ge=1)


class SampleBounds(BaseModel):
    """Lower bounds on the batch size needed before Q-hat_alpha is non-empty."""

    alpha: int
    p_max: float
    generic: float
    low_p: float
    high_p: float


class ScalingPoint(BaseModel):
    p: float
    d: int
    p_l: float = Field(ge=0.0, le=1.0)
    sigma: float = Field(gt=0.0)


class ScalingFit(BaseModel):
    """Result of a finite-size scaling collapse p_L = f((p - p_th) d^(1/nu))."""

    p_th: float = Field(gt=0.0, lt=0.5)
    nu: float = Field(gt=0.0)
    p_th_error: float = 0.0
    nu_error: float = 0.0
    residual: float = 0.0
    coefficients: list[float] = Field(default_factory=list)
    n_points: int = 0
