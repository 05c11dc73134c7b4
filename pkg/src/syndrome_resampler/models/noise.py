"""Noise model, logical classes and Monte Carlo sample batches."""

from collections.abc import Iterator
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .distributions import normalize_key


class NoiseModel(BaseModel):
    """I.i.d. bit-flip channel with per-qubit flip probability ``p``."""

    model_config = ConfigDict(frozen=True)

    p: float = Field(ge=0.0, le=1.0)


class LogicalClass(str, Enum):
    """Logical coset label under X-only noise."""

    I = "I"  # noqa: E741
    X = "X"

    @property
    def bit(self) -> int:
        return 0 if self is LogicalClass.I else 1

    @classmethod
    def from_bit(cls, bit: int) -> "LogicalClass":
        return cls.X if int(bit) & 1 else cls.I

    @property
    def other(self) -> "LogicalClass":
        return LogicalClass.I if self is LogicalClass.X else LogicalClass.X


class SampleRecord(BaseModel):
    """One decoded syndrome sample, as written to a batch file."""

    syndrome: str
    x: int = Field(ge=0, le=1)
    decoder_class: LogicalClass | None = None
    w_mwpm: int | None = None
    w_comp: int | None = None
    gap: int | None = Field(default=None, ge=0)
    p_s: float | None = None

    @field_validator("syndrome")
    @classmethod
    def _hex(cls, v: str) -> str:
        return normalize_key(v)

    @model_validator(mode="after")
    def _gap_consistent(self) -> "SampleRecord":
        if self.w_mwpm is not None and self.w_comp is not None and self.gap is not None:
            if self.gap != self.w_comp - self.w_mwpm:
                raise ValueError("gap must equal w_comp - w_mwpm")
        return self


MISSING = -1


class SampleBatch(BaseModel):
    """Columnar batch of N samples.

    Distinct syndrome keys live once in ``keys``; ``syndrome_index[i]`` points at the
    key of sample i. Integer columns use ``-1`` for "not recorded", ``p_s`` uses NaN.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    code_id: str | None = None
    p: float | None = None
    seed: int | None = None
    distance: int | None = None
    key_bytes: int
    keys: tuple[str, ...]
    syndrome_index: np.ndarray
    failures: np.ndarray
    decoder_class: np.ndarray | None = None
    w_mwpm: np.ndarray | None = None
    w_comp: np.ndarray | None = None
    gap: np.ndarray | None = None
    p_s: np.ndarray | None = None

    @model_validator(mode="after")
    def _columns_consistent(self) -> "SampleBatch":
        n = len(self.syndrome_index)
        for name in ("failures", "decoder_class", "w_mwpm", "w_comp", "gap", "p_s"):
            column = getattr(self, name)
            if column is not None and len(column) != n:
                raise ValueError(f"column '{name}' has {len(column)} rows, expected {n}")
        if n and (self.syndrome_index.min() < 0 or self.syndrome_index.max() >= len(self.keys)):
            raise ValueError("syndrome_index points outside keys")
        if n and not np.isin(self.failures, (0, 1)).all():
            raise ValueError("failure bits must be 0 or 1")
        return self

    @property
    def n(self) -> int:
        return int(len(self.syndrome_index))

    @property
    def key_counts(self) -> np.ndarray:
        """Occurrences per entry of ``keys``."""
        return np.bincount(self.syndrome_index, minlength=len(self.keys))

    @property
    def counts(self) -> dict[str, int]:
        """Count map c_s over syndrome keys; sums to N."""
        return {k: int(c) for k, c in zip(self.keys, self.key_counts, strict=True) if c}

    @property
    def trivial_key_index(self) -> int | None:
        trivial = "00" * self.key_bytes
        try:
            return self.keys.index(trivial)
        except ValueError:
            return None

    @property
    def has_gaps(self) -> bool:
        return self.gap is not None and bool((self.gap >= 0).all())

    @property
    def has_probabilities(self) -> bool:
        return self.p_s is not None and bool(np.isfinite(self.p_s).all())

    def record(self, i: int) -> SampleRecord:
        def _opt_int(column: np.ndarray | None) -> int | None:
            if column is None or column[i] == MISSING:
                return None
            return int(column[i])

        decoder_class = _opt_int(self.decoder_class)
        p_s = None if self.p_s is None or not np.isfinite(self.p_s[i]) else float(self.p_s[i])
        return SampleRecord(
            syndrome=self.keys[self.syndrome_index[i]],
            x=int(self.failures[i]),
            decoder_class=None if decoder_class is None else LogicalClass.from_bit(decoder_class),
            w_mwpm=_opt_int(self.w_mwpm),
            w_comp=_opt_int(self.w_comp),
            gap=_opt_int(self.gap),
            p_s=p_s,
        )

    def iter_records(self) -> Iterator[SampleRecord]:
        for i in range(self.n):
            yield self.record(i)

    def equals(self, other: "SampleBatch") -> bool:
        """Field-by-field equality, comparing array columns element-wise."""
        for name in type(self).model_fields:
            a, b = getattr(self, name), getattr(other, name)
            if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
                if a is None or b is None:
                    return False
                if not np.array_equal(a, b, equal_nan=a.dtype.kind == "f"):
                    return False
            elif a != b:
                return False
        return True
