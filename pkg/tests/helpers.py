"""Shared builders and brute-force oracles for the test suite."""

import numpy as np

from syndrome_resampler.models import CodeSpec, SampleBatch


def make_batch(
    syndromes: list[str],
    failures: list[int],
    gaps: list[int] | None = None,
    p_s: list[float] | None = None,
    distance: int | None = None,
) -> SampleBatch:
    """Batch from per-record syndrome keys, with keys sorted the way ingestion sorts them."""
    keys = tuple(sorted(set(syndromes)))
    position = {k: i for i, k in enumerate(keys)}
    return SampleBatch(
        distance=distance,
        key_bytes=len(syndromes[0]) // 2,
        keys=keys,
        syndrome_index=np.array([position[s] for s in syndromes], dtype=np.int64),
        failures=np.array(failures, dtype=np.uint8),
        gap=None if gaps is None else np.array(gaps, dtype=np.int64),
        p_s=None if p_s is None else np.array(p_s, dtype=np.float64),
    )


def all_patterns(n: int) -> np.ndarray:
    """Every length-n bit pattern as rows of a (2^n, n) array."""
    ints = np.arange(1 << n, dtype=np.int64)
    return ((ints[:, None] >> np.arange(n)) & 1).astype(np.int64)


def brute_force_tables(code: CodeSpec, p: float) -> tuple[np.ndarray, np.ndarray]:
    """(P(s, l), min weight per (s, l)) over all 2^n patterns; inf marks empty cosets."""
    bits = all_patterns(code.n)
    syndromes = (bits @ code.z_check_matrix().astype(np.int64).T) % 2
    index = syndromes @ (1 << np.arange(code.num_checks))
    cls = (bits @ code.z_logical_mask().astype(np.int64)) % 2
    weight = bits.sum(axis=1)
    probs = p**weight * (1 - p) ** (code.n - weight)
    joint = np.zeros((1 << code.num_checks, 2))
    np.add.at(joint, (index, cls), probs)
    minima = np.full((1 << code.num_checks, 2), np.inf)
    np.minimum.at(minima, (index, cls), weight.astype(float))
    return joint, minima


def index_bits(index: int, m: int) -> np.ndarray:
    return ((index >> np.arange(m)) & 1).astype(np.uint8)
