"""Column-by-column trellis over the data qubits of a code.

Qubits are visited in ``code.column_order``. The state after each step records the
parity of every Z check that has been touched but not finished (its "slot") and
the running parity of the error against ``z_logical`` (bit 0). When the last qubit
of a check has been visited its parity is fixed: filtered against the requested
syndrome bit, or split off into the syndrome index for the full joint table.

Min-sum over the trellis gives exact per-class minimum weights; sum-product gives
exact coset probabilities P(s, l). The state count is 2^(1 + max open checks),
which is O(2^d) for left-to-right column order.
"""

import heapq
import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from syndrome_resampler.errors import DimensionError, ResourceError
from syndrome_resampler.models import CodeSpec

logger = logging.getLogger(__name__)

DEFAULT_MAX_STATE_BITS = 20
DEFAULT_MAX_SYNDROME_BITS = 22
DEFAULT_MAX_ELEMENTS = 1 << 25


@dataclass(frozen=True)
class TrellisStep:
    qubit: int
    flip_mask: int
    closes: tuple[tuple[int, int], ...]  # (check, bit position)
    opens: tuple[int, ...] = ()
    touches: tuple[int, ...] = ()


class Trellis:
    """Compiled visiting schedule for one code."""

    def __init__(self, code: CodeSpec, max_state_bits: int = DEFAULT_MAX_STATE_BITS):
        self.code_id = code.code_id
        self.num_checks = code.num_checks
        self.n = code.n

        position = {q: t for t, q in enumerate(code.column_order)}
        opening: list[list[int]] = [[] for _ in range(code.n)]
        closing: list[list[int]] = [[] for _ in range(code.n)]
        for check, support in enumerate(code.z_checks):
            times = [position[q] for q in support]
            opening[min(times)].append(check)
            closing[max(times)].append(check)

        z_logical = set(code.z_logical)
        checks_of_qubit = code.checks_of_qubit()
        free: list[int] = []
        next_slot = 0
        active: dict[int, int] = {}
        steps = []
        for t, qubit in enumerate(code.column_order):
            for check in opening[t]:
                if free:
                    slot = heapq.heappop(free)
                else:
                    slot = next_slot
                    next_slot += 1
                active[check] = slot
            mask = 1 if qubit in z_logical else 0
            for check in checks_of_qubit[qubit]:
                mask |= 1 << (1 + active[check])
            closes = tuple((check, 1 + active[check]) for check in closing[t])
            for check in closing[t]:
                heapq.heappush(free, active.pop(check))
            steps.append(
                TrellisStep(
                    qubit=qubit,
                    flip_mask=mask,
                    closes=closes,
                    opens=tuple(opening[t]),
                    touches=checks_of_qubit[qubit],
                )
            )

        self.steps = tuple(steps)
        self.state_bits = 1 + next_slot
        if self.state_bits > max_state_bits:
            raise ResourceError(
                f"trellis of {self.code_id} needs {self.state_bits} state bits, "
                f"budget is {max_state_bits}"
            )
        self.num_states = 1 << self.state_bits
        states = np.arange(self.num_states)
        self._perms = {s.flip_mask: states ^ s.flip_mask for s in self.steps}
        logger.debug(
            "compiled trellis for %s: %d steps, %d state bits",
            self.code_id,
            len(self.steps),
            self.state_bits,
        )

    def _check_syndromes(self, syndromes: np.ndarray) -> np.ndarray:
        syndromes = np.atleast_2d(np.asarray(syndromes, dtype=np.uint8))
        if syndromes.shape[1] != self.num_checks:
            raise DimensionError(
                f"syndrome has {syndromes.shape[1]} bits, trellis of {self.code_id} "
                f"expects {self.num_checks}"
            )
        return syndromes

    def _chunk_size(self, max_elements: int) -> int:
        return max(1, max_elements // self.num_states)

    @staticmethod
    def _filter(values: np.ndarray, bits: np.ndarray, pos: int, fill: float) -> np.ndarray:
        """Keep states whose bit ``pos`` equals each row's syndrome bit, then clear it."""
        rows, size = values.shape
        low = 1 << pos
        high = size // (2 * low)
        split = values.reshape(rows, high, 2, low)
        chosen = np.where(bits.astype(bool)[:, None, None], split[:, :, 1, :], split[:, :, 0, :])
        out = np.full_like(split, fill)
        out[:, :, 0, :] = chosen
        return out.reshape(rows, size)

    def min_weights(
        self, syndromes: np.ndarray, max_elements: int = DEFAULT_MAX_ELEMENTS
    ) -> np.ndarray:
        """Minimum error weight per (syndrome, class) as a float array (S, 2).

        Column 0 is class I, column 1 class X; ``inf`` marks an empty coset.
        """
        syndromes = self._check_syndromes(syndromes)
        out = np.empty((len(syndromes), 2))
        chunk = self._chunk_size(max_elements)
        for start in range(0, len(syndromes), chunk):
            block = syndromes[start : start + chunk]
            values = np.full((len(block), self.num_states), np.inf)
            values[:, 0] = 0.0
            for step in self.steps:
                values = np.minimum(values, values[:, self._perms[step.flip_mask]] + 1.0)
                for check, pos in step.closes:
                    values = self._filter(values, block[:, check], pos, np.inf)
            out[start : start + len(block)] = values[:, :2]
        return out

    def log_coset_probabilities(
        self, syndromes: np.ndarray, p: float, max_elements: int = DEFAULT_MAX_ELEMENTS
    ) -> np.ndarray:
        """Natural-log coset probabilities ln P(s, l) as an array (S, 2).

        Rows are rescaled after every step so long codes do not underflow.
        """
        syndromes = self._check_syndromes(syndromes)
        out = np.empty((len(syndromes), 2))
        chunk = self._chunk_size(max_elements)
        keep, flip = 1.0 - p, p
        for start in range(0, len(syndromes), chunk):
            block = syndromes[start : start + chunk]
            values = np.zeros((len(block), self.num_states))
            values[:, 0] = 1.0
            log_scale = np.zeros(len(block))
            for step in self.steps:
                values = keep * values + flip * values[:, self._perms[step.flip_mask]]
                for check, pos in step.closes:
                    values = self._filter(values, block[:, check], pos, 0.0)
                peak = values.max(axis=1)
                peak = np.where(peak > 0, peak, 1.0)
                values /= peak[:, None]
                log_scale += np.log(peak)
            with np.errstate(divide="ignore"):
                out[start : start + len(block)] = np.log(values[:, :2]) + log_scale[:, None]
        return out

    def joint_table(
        self,
        p: float,
        max_syndrome_bits: int = DEFAULT_MAX_SYNDROME_BITS,
        max_elements: int = DEFAULT_MAX_ELEMENTS,
    ) -> np.ndarray:
        """P(s, l) for every syndrome index, shape (2^m, 2).

        A closed check's parity moves from the frontier into the row index, so a
        single sweep produces the whole table while the frontier only ever holds
        the open checks.
        """
        m = self.num_checks
        if m > max_syndrome_bits:
            raise ResourceError(
                f"{self.code_id} has {m} checks; full syndrome table budget is "
                f"{max_syndrome_bits} bits"
            )
        # Bit 0 is the logical parity, bit 1 + i the parity of open_checks[i].
        values = np.array([[1.0, 0.0]])
        open_checks: list[int] = []
        closed: list[int] = []
        keep, flip = 1.0 - p, p
        for step in self.steps:
            for check in step.opens:
                open_checks.append(check)
                values = np.concatenate([values, np.zeros_like(values)], axis=1)
            mask = step.flip_mask & 1
            for check in step.touches:
                mask |= 1 << (1 + open_checks.index(check))
            states = np.arange(values.shape[1])
            values = keep * values + flip * values[:, states ^ mask]
            for check, _ in step.closes:
                rows, size = values.shape
                low = 1 << (1 + open_checks.index(check))
                split = values.reshape(rows, size // (2 * low), 2, low)
                values = split.transpose(0, 2, 1, 3).reshape(2 * rows, size // 2)
                open_checks.remove(check)
                closed.append(check)
            if values.size > max_elements:
                raise ResourceError(
                    f"full joint of {self.code_id} exceeds {max_elements} table elements"
                )

        # Row r holds the bit of closed[t] at position m - 1 - t.
        rows = np.arange(1 << m, dtype=np.int64)
        target = np.zeros_like(rows)
        for t, check in enumerate(closed):
            target |= ((rows >> (m - 1 - t)) & 1) << check
        table = np.empty((1 << m, 2))
        table[target] = values[:, :2]
        return table


@lru_cache(maxsize=32)
def get_trellis(code: CodeSpec, max_state_bits: int = DEFAULT_MAX_STATE_BITS) -> Trellis:
    """Cached trellis per (code, budget)."""
    return Trellis(code, max_state_bits=max_state_bits)
