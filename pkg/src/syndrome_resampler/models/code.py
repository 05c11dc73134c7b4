"""Surface-code instances and their validation reports.

A :class:`CodeSpec` only holds integer tuples so it is hashable and cheap to ship
to worker processes; dense matrices are derived on demand and cached per code.
"""

from enum import Enum
from functools import lru_cache

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class Layout(str, Enum):
    """Lattice layout of the surface code."""

    ROTATED = "rotated"
    UNROTATED = "unrotated"


class BoundaryTag(str, Enum):
    """Which lattice boundary a data qubit sits on."""

    TOP = "top"
    BOTTOM = "bottom"
    LEFT = "left"
    RIGHT = "right"


class QubitSite(BaseModel):
    """Lattice coordinates of one data qubit."""

    model_config = ConfigDict(frozen=True)

    row: int
    col: int
    boundaries: tuple[BoundaryTag, ...] = ()


class CodeSpec(BaseModel):
    """A distance-d surface code protecting one logical qubit against bit flips.

    ``z_checks`` detect X errors and are the only checks the decoders look at;
    ``x_checks`` are kept for validation and for stabilizer-equivalence tests.
    """

    model_config = ConfigDict(frozen=True)

    distance: int = Field(ge=2)
    layout: Layout
    n: int
    k: int = 1
    z_checks: tuple[tuple[int, ...], ...]
    x_checks: tuple[tuple[int, ...], ...]
    x_logical: tuple[int, ...]
    z_logical: tuple[int, ...]
    sites: tuple[QubitSite, ...]
    column_order: tuple[int, ...]

    @property
    def code_id(self) -> str:
        return f"{self.layout.value}-d{self.distance}"

    @property
    def num_checks(self) -> int:
        return len(self.z_checks)

    @property
    def key_bytes(self) -> int:
        """Width of a packed syndrome key in bytes."""
        return (self.num_checks + 7) // 8

    def z_check_matrix(self) -> np.ndarray:
        """Dense ``(num_checks, n)`` uint8 incidence matrix of the Z checks."""
        return _incidence(self.z_checks, self.n)

    def x_check_matrix(self) -> np.ndarray:
        return _incidence(self.x_checks, self.n)

    def z_logical_mask(self) -> np.ndarray:
        return _incidence((self.z_logical,), self.n)[0]

    def x_logical_mask(self) -> np.ndarray:
        return _incidence((self.x_logical,), self.n)[0]

    def checks_of_qubit(self) -> tuple[tuple[int, ...], ...]:
        """For every qubit, the Z checks it participates in (ascending)."""
        return _checks_of_qubit(self.z_checks, self.n)


@lru_cache(maxsize=64)
def _incidence(supports: tuple[tuple[int, ...], ...], n: int) -> np.ndarray:
    matrix = np.zeros((len(supports), n), dtype=np.uint8)
    for row, support in enumerate(supports):
        matrix[row, list(support)] = 1
    matrix.setflags(write=False)
    return matrix


@lru_cache(maxsize=64)
def _checks_of_qubit(
    supports: tuple[tuple[int, ...], ...], n: int
) -> tuple[tuple[int, ...], ...]:
    members: list[list[int]] = [[] for _ in range(n)]
    for check, support in enumerate(supports):
        for qubit in support:
            members[qubit].append(check)
    return tuple(tuple(m) for m in members)


class CheckStatus(str, Enum):
    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"


class ValidationCheck(BaseModel):
    """Outcome of one structural check on a code."""

    name: str
    status: CheckStatus
    detail: str | None = None


class ValidationReport(BaseModel):
    """Pass/fail list over all CodeSpec invariants."""

    code_id: str
    checks: list[ValidationCheck] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != CheckStatus.FAILED for c in self.checks)

    @property
    def failures(self) -> list[ValidationCheck]:
        return [c for c in self.checks if c.status == CheckStatus.FAILED]
