"""Seeded Monte Carlo batches.

Samples are drawn in fixed blocks of :data:`BLOCK_SIZE`. Block ``b`` uses its own
Philox stream seeded by ``SeedSequence(seed, spawn_key=(b,))``, so the batch is a
function of (code, p, N, seed) alone and never of how blocks are spread over
workers. Decoding runs once per distinct syndrome.
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp

from syndrome_resampler.codes import DetectionGraph
from syndrome_resampler.decoders import (
    BlossomDecoder,
    PyMatchingDecoder,
    class_min_weights,
    gaps_from_weights,
    get_trellis,
)
from syndrome_resampler.errors import ResamplerError
from syndrome_resampler.models import (
    CodeSpec,
    DecoderConfig,
    DecoderMethod,
    MatchingBackend,
    NoiseModel,
    SampleBatch,
)
from syndrome_resampler.noise.base import BatchAbortedError, SamplingError
from syndrome_resampler.noise.sampling import error_class_bits, pack_syndromes, syndromes_of
from syndrome_resampler.parallel import parallel_map

logger = logging.getLogger(__name__)

BLOCK_SIZE = 4096
DECODE_CHUNK = 8192


def block_rng(seed: int, block: int) -> np.random.Generator:
    """Independent counter-based stream for one sample block."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(block,))))


def _sample_block(
    code: CodeSpec, p: float, seed: int, block: int, size: int
) -> tuple[np.ndarray, np.ndarray]:
    rng = block_rng(seed, block)
    errors = (rng.random((size, code.n)) < p).astype(np.uint8)
    return pack_syndromes(syndromes_of(code, errors)), error_class_bits(code, errors)


def sample_syndromes(
    code: CodeSpec, noise: NoiseModel, n_samples: int, seed: int, workers: int = 1
) -> tuple[np.ndarray, np.ndarray]:
    """Packed syndromes (N, key_bytes) and error class bits (N,) for N seeded samples."""
    jobs = [
        (code, noise.p, seed, b, min(BLOCK_SIZE, n_samples - start))
        for b, start in enumerate(range(0, n_samples, BLOCK_SIZE))
    ]
    blocks = parallel_map(_sample_block, jobs, workers)
    return np.concatenate([b[0] for b in blocks]), np.concatenate([b[1] for b in blocks])


@dataclass
class _ChunkOutcome:
    decoder_class: np.ndarray | None = None
    w_mwpm: np.ndarray | None = None
    gap: np.ndarray | None = None
    p_s: np.ndarray | None = None
    error: Exception | None = None


def _decode_chunk(
    code: CodeSpec, p: float, cfg: DecoderConfig, syndromes: np.ndarray
) -> _ChunkOutcome:
    try:
        out = _ChunkOutcome()
        minima = None
        if cfg.method is DecoderMethod.MWPM:
            if cfg.backend is MatchingBackend.BLOSSOM:
                decoder = BlossomDecoder(DetectionGraph(code), code)
            else:
                decoder = PyMatchingDecoder(code)
            out.w_mwpm, out.decoder_class = decoder.decode_batch(syndromes)
        else:
            trellis = get_trellis(code, cfg.max_state_bits)
            logs = trellis.log_coset_probabilities(syndromes, p)
            out.decoder_class = (logs[:, 1] > logs[:, 0]).astype(np.uint8)
            minima = class_min_weights(code, syndromes, cfg.max_state_bits)
            out.w_mwpm = minima.min(axis=1)
        if cfg.with_gap:
            if minima is None:
                minima = class_min_weights(code, syndromes, cfg.max_state_bits)
            out.gap, _ = gaps_from_weights(minima)
        if cfg.with_exact_prob:
            logs = get_trellis(code, cfg.max_state_bits).log_coset_probabilities(syndromes, p)
            out.p_s = np.exp(logsumexp(logs, axis=1))
        return out
    except (ResamplerError, ValueError) as e:
        return _ChunkOutcome(error=e)


def run_batch(
    code: CodeSpec,
    noise: NoiseModel,
    n_samples: int,
    decoder_cfg: DecoderConfig | None = None,
    seed: int = 0,
    workers: int = 1,
) -> SampleBatch:
    """Sample ``n_samples`` errors, decode their syndromes and record X_s.

    X_s is the residual class of the sampled error against the decoder's class.
    Bit-identical for identical arguments whatever ``workers`` is.

    Raises:
        SamplingError: If ``n_samples < 1`` or ``seed`` is negative.
        BatchAbortedError: If decoding fails; carries the first affected record index.
    """
    if n_samples < 1:
        raise SamplingError(f"n_samples must be >= 1, got {n_samples}")
    if seed < 0:
        raise SamplingError(f"seed must be non-negative, got {seed}")
    cfg = decoder_cfg or DecoderConfig()

    packed, err_class = sample_syndromes(code, noise, n_samples, seed, workers)

    unique, inverse = np.unique(packed, axis=0, return_inverse=True)
    inverse = np.asarray(inverse).reshape(-1)
    syndromes = np.unpackbits(unique, axis=1, bitorder="little")[:, : code.num_checks]
    logger.info(
        "%s p=%g: %d samples, %d distinct syndromes", code.code_id, noise.p, n_samples, len(unique)
    )

    starts = list(range(0, len(unique), DECODE_CHUNK))
    outcomes = parallel_map(
        _decode_chunk,
        [(code, noise.p, cfg, syndromes[s : s + DECODE_CHUNK]) for s in starts],
        workers,
    )
    failed = [
        (s, o.error) for s, o in zip(starts, outcomes, strict=True) if o.error is not None
    ]
    if failed:
        bad = np.zeros(len(unique), dtype=bool)
        for s, _ in failed:
            bad[s : s + DECODE_CHUNK] = True
        first = int(np.flatnonzero(bad[inverse])[0])
        raise BatchAbortedError(first, failed[0][1])

    def _column(name: str, dtype) -> np.ndarray | None:
        parts = [getattr(o, name) for o in outcomes]
        if any(part is None for part in parts):
            return None
        return np.concatenate(parts).astype(dtype)[inverse]

    decoder_class = _column("decoder_class", np.int8)
    w_mwpm = _column("w_mwpm", np.int64)
    gap = _column("gap", np.int64)
    p_s = _column("p_s", np.float64)
    w_comp = None if gap is None else w_mwpm + gap

    failures = (err_class ^ decoder_class.astype(np.uint8)).astype(np.uint8)
    return SampleBatch(
        code_id=code.code_id,
        p=noise.p,
        seed=seed,
        distance=code.distance,
        key_bytes=code.key_bytes,
        keys=tuple(row.tobytes().hex() for row in unique),
        syndrome_index=inverse.astype(np.int64),
        failures=failures,
        decoder_class=decoder_class,
        w_mwpm=w_mwpm,
        w_comp=w_comp,
        gap=gap,
        p_s=p_s,
    )


__all__ = ["BLOCK_SIZE", "block_rng", "run_batch", "sample_syndromes"]
