"""Bit-flip errors, syndromes, syndrome keys and residual classes."""

import numpy as np

from syndrome_resampler.errors import ContractViolationError, DimensionError
from syndrome_resampler.models import CodeSpec, LogicalClass, NoiseModel, normalize_key


def sample_error(code: CodeSpec, noise: NoiseModel, rng: np.random.Generator) -> np.ndarray:
    """Flip every qubit independently with probability ``noise.p``."""
    return (rng.random(code.n) < noise.p).astype(np.uint8)


def sample_errors(
    code: CodeSpec, noise: NoiseModel, rng: np.random.Generator, size: int
) -> np.ndarray:
    """``size`` independent error patterns as a (size, n) uint8 array."""
    return (rng.random((size, code.n)) < noise.p).astype(np.uint8)


def _as_patterns(code: CodeSpec, e: np.ndarray) -> np.ndarray:
    e = np.asarray(e, dtype=np.uint8)
    if e.shape[-1] != code.n:
        raise DimensionError(f"error pattern has {e.shape[-1]} bits, code has n={code.n}")
    return e


def syndromes_of(code: CodeSpec, errors: np.ndarray) -> np.ndarray:
    """Syndromes of a (S, n) stack of error patterns, shape (S, m)."""
    errors = _as_patterns(code, np.atleast_2d(errors))
    hz = code.z_check_matrix().astype(np.int64)
    return ((errors.astype(np.int64) @ hz.T) % 2).astype(np.uint8)


def syndrome_of(code: CodeSpec, e: np.ndarray) -> np.ndarray:
    """Bit j is the parity of ``e`` over Z check j."""
    e = _as_patterns(code, e)
    if e.ndim != 1:
        raise DimensionError("syndrome_of expects a single error pattern")
    return syndromes_of(code, e)[0]


def error_class_bits(code: CodeSpec, errors: np.ndarray) -> np.ndarray:
    """Parity of each error row against ``z_logical``."""
    errors = _as_patterns(code, np.atleast_2d(errors))
    return ((errors.astype(np.int64) @ code.z_logical_mask().astype(np.int64)) % 2).astype(
        np.uint8
    )


def residual_class(code: CodeSpec, e: np.ndarray, correction: np.ndarray) -> LogicalClass:
    """Logical class of ``e + correction``, which must have a trivial syndrome."""
    residual = _as_patterns(code, e) ^ _as_patterns(code, correction)
    if syndrome_of(code, residual).any():
        raise ContractViolationError("residual e + correction has a nontrivial syndrome")
    return LogicalClass.from_bit(int(error_class_bits(code, residual)[0]))


def pack_syndromes(syndromes: np.ndarray) -> np.ndarray:
    """Little-endian packed rows, ceil(m/8) bytes each."""
    return np.packbits(np.atleast_2d(syndromes), axis=1, bitorder="little")


def encode_syndrome(bits: np.ndarray) -> str:
    """Canonical hex key of a syndrome bit vector."""
    return pack_syndromes(np.asarray(bits, dtype=np.uint8))[0].tobytes().hex()


def decode_syndrome(key: str, num_checks: int) -> np.ndarray:
    """Bit vector of length ``num_checks`` from a hex key."""
    try:
        raw = np.frombuffer(bytes.fromhex(normalize_key(key)), dtype=np.uint8)
    except ValueError as e:
        raise ContractViolationError(str(e)) from e
    if len(raw) != (num_checks + 7) // 8:
        raise DimensionError(
            f"key {key!r} has {len(raw)} bytes, expected {(num_checks + 7) // 8}"
        )
    return np.unpackbits(raw, bitorder="little")[:num_checks].copy()


def decode_syndromes(keys: list[str] | tuple[str, ...], num_checks: int) -> np.ndarray:
    if not keys:
        return np.zeros((0, num_checks), dtype=np.uint8)
    raw = np.frombuffer(b"".join(bytes.fromhex(normalize_key(k)) for k in keys), dtype=np.uint8)
    raw = raw.reshape(len(keys), -1)
    return np.unpackbits(raw, axis=1, bitorder="little")[:, :num_checks].copy()


def trivial_key(num_checks: int) -> str:
    return "00" * ((num_checks + 7) // 8)
