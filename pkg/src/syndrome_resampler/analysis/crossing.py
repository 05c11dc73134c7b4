"""Crossing point of two sampled curves by linear interpolation."""

from collections.abc import Sequence

import numpy as np

from syndrome_resampler.analysis.base import (
    AmbiguousCrossingError,
    DegenerateInputError,
    NoCrossingError,
)


def _sorted(curve: Sequence[tuple[float, float]]) -> tuple[np.ndarray, np.ndarray]:
    pairs = sorted((float(p), float(v)) for p, v in curve)
    return np.array([p for p, _ in pairs]), np.array([v for _, v in pairs])


def crossings(
    curve_a: Sequence[tuple[float, float]], curve_b: Sequence[tuple[float, float]]
) -> list[float]:
    """Every abscissa where ``curve_a - curve_b`` changes sign."""
    p_a, v_a = _sorted(curve_a)
    p_b, v_b = _sorted(curve_b)
    if len(p_a) < 2 or not np.array_equal(p_a, p_b):
        raise DegenerateInputError("curves must share a p grid of at least two points")
    diff = v_a - v_b
    nonzero = np.flatnonzero(diff != 0)
    found = []
    for i, j in zip(nonzero[:-1], nonzero[1:], strict=True):
        if np.sign(diff[i]) == np.sign(diff[j]):
            continue
        if j == i + 1:
            t = diff[i] / (diff[i] - diff[j])
            found.append(float(p_a[i] + t * (p_a[j] - p_a[i])))
        else:
            # exact zeros between i and j
            found.append(float(p_a[i + 1 : j].mean()))
    return found


def crossing_point(
    curve_a: Sequence[tuple[float, float]], curve_b: Sequence[tuple[float, float]]
) -> float:
    """The single crossing of two curves on a shared p grid.

    Raises:
        NoCrossingError: If the difference never changes sign.
        AmbiguousCrossingError: If it changes sign more than once.
    """
    found = crossings(curve_a, curve_b)
    if not found:
        raise NoCrossingError("curves do not cross on their common grid")
    if len(found) > 1:
        raise AmbiguousCrossingError(found)
    return found[0]
