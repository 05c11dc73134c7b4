"""Exact and empirical syndrome distributions.

Dense tables are indexed by the syndrome integer whose bit j is check j; the
hex key of index ``i`` is ``i.to_bytes(key_bytes, "little").hex()``.
"""

import math
from collections.abc import Iterator
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator


def index_to_key(index: int, key_bytes: int) -> str:
    return int(index).to_bytes(key_bytes, "little").hex()


def normalize_key(key: str) -> str:
    """Lower-case, even-length hex key; raises ValueError for anything else."""
    key = key.strip().lower()
    if len(key) % 2:
        key = "0" + key
    try:
        bytes.fromhex(key)
    except ValueError as e:
        raise ValueError(f"syndrome must be a hex string, got {key!r}") from e
    return key


def key_to_index(key: str) -> int:
    return int.from_bytes(bytes.fromhex(key), "little")


class JointMethod(str, Enum):
    ENUMERATION = "enumeration"
    TRELLIS = "trellis"


class JointDistribution(BaseModel):
    """Exact table P(s, l) over all 2^m syndromes and both logical classes."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    code_id: str
    p: float
    num_checks: int
    method: JointMethod
    table: np.ndarray

    @model_validator(mode="after")
    def _shape(self) -> "JointDistribution":
        if self.table.shape != (1 << self.num_checks, 2):
            raise ValueError(
                f"table must have shape ({1 << self.num_checks}, 2), got {self.table.shape}"
            )
        if (self.table < 0).any():
            raise ValueError("probabilities must be non-negative")
        return self

    @property
    def key_bytes(self) -> int:
        return (self.num_checks + 7) // 8

    @property
    def syndrome_probabilities(self) -> np.ndarray:
        """Marginal P(s) for every syndrome index."""
        return self.table.sum(axis=1)

    @property
    def supported(self) -> np.ndarray:
        """Indices of syndromes with P(s) > 0."""
        return np.flatnonzero(self.syndrome_probabilities > 0)

    @property
    def total_mass(self) -> float:
        return math.fsum(self.table.ravel())

    def conditional(self) -> np.ndarray:
        """P(l|s) for every syndrome; rows of unsupported syndromes are zero."""
        marginal = self.syndrome_probabilities
        out = np.zeros_like(self.table)
        mask = marginal > 0
        out[mask] = self.table[mask] / marginal[mask, None]
        return out

    def __getitem__(self, key: str) -> tuple[float, float]:
        row = self.table[key_to_index(key)]
        return float(row[0]), float(row[1])

    def items(self) -> Iterator[tuple[str, tuple[float, float]]]:
        """Supported syndrome keys with their (P(s,I), P(s,X)) vectors."""
        for index in self.supported:
            row = self.table[index]
            yield index_to_key(int(index), self.key_bytes), (float(row[0]), float(row[1]))


class PowerDistribution(BaseModel):
    """Q_alpha(s) = P^alpha(s) / Z_alpha over the dense syndrome index space."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    alpha: float = Field(ge=0.0)
    num_checks: int
    log2_normalizer: float
    probabilities: np.ndarray

    @property
    def normalizer(self) -> float:
        """Z_alpha; may underflow to 0 for large alpha, use ``log2_normalizer`` then."""
        return float(2.0**self.log2_normalizer)

    def __getitem__(self, key: str) -> float:
        return float(self.probabilities[key_to_index(key)])


class RciValue(BaseModel):
    """Renyi coherent information in bits."""

    alpha: float
    value: float
    raw: bool = False
    method: str = "exact"
    std_error: float | None = None


class EmpiricalPowerDistribution(BaseModel):
    """Good's unbiased estimate of P^alpha from syndrome counts."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    alpha: int = Field(ge=1)
    n_samples: int = Field(ge=0)
    keys: tuple[str, ...]
    power: np.ndarray

    @property
    def normalizer(self) -> float:
        """Z-hat_alpha, the sum of the per-syndrome estimates."""
        return math.fsum(self.power)

    @property
    def is_empty(self) -> bool:
        return self.normalizer == 0.0

    @property
    def q(self) -> np.ndarray:
        """Normalised Q-hat_alpha aligned with ``keys``; all zeros when Z-hat is 0."""
        z = self.normalizer
        if z == 0.0:
            return np.zeros_like(self.power)
        return self.power / z

    def as_dict(self) -> dict[str, float]:
        return {k: float(v) for k, v in zip(self.keys, self.power, strict=True)}

    def renyi_entropy(self) -> float:
        """Plug-in Renyi entropy log2(Z-hat_alpha)/(1 - alpha) in bits (Shannon at alpha=1)."""
        if self.alpha == 1:
            q = self.power[self.power > 0]
            return float(-(q * np.log2(q)).sum())
        z = self.normalizer
        if z == 0.0:
            return math.inf
        return math.log2(z) / (1 - self.alpha)
