"""Experiment configuration and the external record schema."""

from enum import Enum
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .code import Layout
from .distributions import normalize_key
from .estimates import EstimationMethod


class DecoderMethod(str, Enum):
    MWPM = "mwpm"
    MLD = "mld"


class MatchingBackend(str, Enum):
    """Which exact MWPM implementation decodes batches."""

    PYMATCHING = "pymatching"
    BLOSSOM = "blossom"


class DecoderConfig(BaseModel):
    """What run_batch computes for every record."""

    model_config = ConfigDict(frozen=True)

    method: DecoderMethod = DecoderMethod.MWPM
    backend: MatchingBackend = MatchingBackend.PYMATCHING
    with_gap: bool = False
    with_exact_prob: bool = False
    max_state_bits: int = Field(default=20, ge=2)


class ExperimentConfig(BaseModel):
    """A full (d, p, method, alpha, c) grid run."""

    name: str = "experiment"
    layout: Layout = Layout.ROTATED
    code_file: Path | None = None
    distances: list[int] = Field(min_length=1)
    p_grid: list[float] = Field(min_length=1)
    n_samples: int = Field(ge=1)
    seed: int = 0
    decoder: DecoderMethod = DecoderMethod.MWPM
    backend: MatchingBackend = MatchingBackend.PYMATCHING
    methods: list[EstimationMethod] = Field(
        default_factory=lambda: [EstimationMethod.PLAIN], min_length=1
    )
    alphas: list[float] = Field(default_factory=lambda: [2.0], min_length=1)
    confidences: list[float] = Field(default_factory=lambda: [1.0], min_length=1)
    n_tilde: int | None = None
    n_bootstrap: int = Field(default=200, ge=0)
    ci_level: float = Field(default=0.67, gt=0.0, lt=1.0)
    workers: int | None = None
    output_dir: Path = Path("results")

    @field_validator("p_grid")
    @classmethod
    def _p_in_range(cls, v: list[float]) -> list[float]:
        if any(not 0.0 <= p <= 1.0 for p in v):
            raise ValueError("p values must lie in [0, 1]")
        return v

    @field_validator("confidences")
    @classmethod
    def _c_in_range(cls, v: list[float]) -> list[float]:
        if any(not 0.0 <= c <= 1.0 for c in v):
            raise ValueError("confidences must lie in [0, 1]")
        return v

    @model_validator(mode="after")
    def _alphas_for_empirical(self) -> "ExperimentConfig":
        empirical = {EstimationMethod.SR_EMPIRICAL, EstimationMethod.COMBINED}
        if empirical & set(self.methods):
            if any(a < 1 or a != int(a) for a in self.alphas):
                raise ValueError("empirical methods need integer alphas >= 1")
        if any(a < 1 for a in self.alphas):
            raise ValueError("alphas must be >= 1")
        if any(d < 2 for d in self.distances):
            raise ValueError("distances must be >= 2")
        if 0 < self.n_bootstrap < 100:
            raise ValueError("n_bootstrap must be 0 (no intervals) or at least 100")
        return self

    @property
    def needs_gap(self) -> bool:
        return bool({EstimationMethod.CGPS, EstimationMethod.COMBINED} & set(self.methods))

    @property
    def needs_exact_prob(self) -> bool:
        return EstimationMethod.SR_EXACT in self.methods


class ExternalRecord(BaseModel):
    """One externally recorded shot: detection-event key and observed failure."""

    syndrome: str
    x: int = Field(ge=0, le=1)
    gap: int | None = Field(default=None, ge=0)
    d: int | None = Field(default=None, ge=1)

    @field_validator("syndrome")
    @classmethod
    def _hex(cls, v: str) -> str:
        return normalize_key(v)
