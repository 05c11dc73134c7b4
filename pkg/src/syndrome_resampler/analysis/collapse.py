"""Finite-size scaling collapse p_L = f((p - p_th) d^(1/nu)) with polynomial f.

For fixed (p_th, nu) the polynomial coefficients are a weighted linear least-squares
problem; the outer search over (p_th, nu) is Nelder-Mead with seeded restarts.
"""

import logging
from collections.abc import Sequence

import numpy as np
from scipy.optimize import minimize

from syndrome_resampler.analysis.base import DegenerateInputError, FitFailureError
from syndrome_resampler.models import ScalingFit, ScalingPoint
from syndrome_resampler.parallel import parallel_map

logger = logging.getLogger(__name__)

DEFAULT_ORDER = 2
DEFAULT_RESTARTS = 20
DEFAULT_BOOTSTRAP = 100
MIN_DISTANCES = 3
MIN_P_PER_DISTANCE = 4
_PENALTY = 1e30


def scaling_variable(p, d, p_th: float, nu: float) -> np.ndarray:
    return (np.asarray(p, dtype=np.float64) - p_th) * np.asarray(d, dtype=np.float64) ** (1.0 / nu)


def _fit_polynomial(
    params: np.ndarray, p: np.ndarray, d: np.ndarray, y: np.ndarray, w: np.ndarray, order: int
) -> tuple[float, np.ndarray]:
    """Weighted chi-square of the best polynomial at (p_th, nu), and its coefficients."""
    p_th, nu = float(params[0]), float(params[1])
    if not (0.0 < p_th < 0.5) or nu <= 0.05:
        return _PENALTY, np.zeros(order + 1)
    x = scaling_variable(p, d, p_th, nu)
    root_w = np.sqrt(w)
    design = np.vander(x, order + 1, increasing=True)
    coef, *_ = np.linalg.lstsq(design * root_w[:, None], y * root_w, rcond=None)
    resid = y - design @ coef
    return float(np.sum(w * resid**2)), coef


def _objective(params, p, d, y, w, order) -> float:
    return _fit_polynomial(np.asarray(params), p, d, y, w, order)[0]


def _run_restart(
    x0: np.ndarray, p: np.ndarray, d: np.ndarray, y: np.ndarray, w: np.ndarray, order: int
) -> tuple[float, np.ndarray, bool]:
    result = minimize(
        _objective,
        x0,
        args=(p, d, y, w, order),
        method="Nelder-Mead",
        options={"xatol": 1e-9, "fatol": 1e-12, "maxiter": 4000},
    )
    return float(result.fun), np.asarray(result.x), bool(result.success)


def _arrays(points: Sequence[ScalingPoint]) -> tuple[np.ndarray, ...]:
    p = np.array([pt.p for pt in points], dtype=np.float64)
    d = np.array([pt.d for pt in points], dtype=np.float64)
    y = np.array([pt.p_l for pt in points], dtype=np.float64)
    w = 1.0 / np.array([pt.sigma for pt in points], dtype=np.float64) ** 2
    return p, d, y, w


def _best_fit(
    p, d, y, w, starts: list[np.ndarray], order: int, workers: int
) -> tuple[float, np.ndarray, bool]:
    runs = parallel_map(_run_restart, [(x0, p, d, y, w, order) for x0 in starts], workers)
    # min residual, ties broken by restart index
    best = min(range(len(runs)), key=lambda i: (runs[i][0], i))
    return runs[best][0], runs[best][1], any(r[2] for r in runs)


def _check_points(points: Sequence[ScalingPoint]) -> None:
    by_distance: dict[int, set[float]] = {}
    for pt in points:
        by_distance.setdefault(pt.d, set()).add(pt.p)
    if len(by_distance) < MIN_DISTANCES:
        raise DegenerateInputError(
            f"collapse needs at least {MIN_DISTANCES} distances, got {sorted(by_distance)}"
        )
    thin = {d: len(ps) for d, ps in by_distance.items() if len(ps) < MIN_P_PER_DISTANCE}
    if thin:
        raise DegenerateInputError(
            f"each distance needs at least {MIN_P_PER_DISTANCE} p values, got {thin}"
        )


def scaling_collapse(
    points: Sequence[ScalingPoint],
    init: tuple[float, float] = (0.1, 1.5),
    order: int = DEFAULT_ORDER,
    restarts: int = DEFAULT_RESTARTS,
    n_bootstrap: int = DEFAULT_BOOTSTRAP,
    seed: int = 0,
    workers: int = 1,
) -> ScalingFit:
    """Fit (p_th, nu) and the scaling polynomial to ``points``.

    Uncertainties are the standard deviations of (p_th, nu) over ``n_bootstrap``
    refits on points resampled with replacement, each started from the best fit.

    Raises:
        DegenerateInputError: Fewer than 3 distances or fewer than 4 p values for one.
        FitFailureError: If no restart converges.
    """
    _check_points(points)
    p, d, y, w = _arrays(points)
    rng = np.random.Generator(np.random.Philox(seed))
    center = np.array(init, dtype=np.float64)
    jitter = rng.normal(size=(max(restarts, 1) - 1, 2)) * np.array([0.01, 0.3])
    starts = [center] + [np.abs(center + j) for j in jitter]

    residual, best, converged = _best_fit(p, d, y, w, starts, order, workers)
    if not converged or residual >= _PENALTY:
        raise FitFailureError("scaling collapse did not converge", residual)
    _, coef = _fit_polynomial(best, p, d, y, w, order)

    replicates = []
    for _ in range(n_bootstrap):
        idx = rng.integers(0, len(p), size=len(p))
        fun, x, ok = _run_restart(best, p[idx], d[idx], y[idx], w[idx], order)
        if ok and fun < _PENALTY:
            replicates.append(x)
    spread = np.std(replicates, axis=0, ddof=1) if len(replicates) > 1 else np.zeros(2)

    dof = max(len(p) - (order + 1) - 2, 1)
    logger.info(
        "collapse: p_th=%.5f nu=%.4f chi2/dof=%.4g over %d points",
        best[0],
        best[1],
        residual / dof,
        len(p),
    )
    return ScalingFit(
        p_th=float(best[0]),
        nu=float(best[1]),
        p_th_error=float(spread[0]),
        nu_error=float(spread[1]),
        residual=residual / dof,
        coefficients=[float(c) for c in coef],
        n_points=len(p),
    )


def synthetic_scaling_points(
    p_th: float,
    nu: float,
    coefficients: Sequence[float],
    distances: Sequence[int],
    p_grid: Sequence[float],
    noise: float = 0.01,
    seed: int = 0,
) -> list[ScalingPoint]:
    """Points on an exact collapse curve with relative Gaussian noise of size ``noise``."""
    rng = np.random.Generator(np.random.Philox(seed))
    points = []
    for d in distances:
        for p in p_grid:
            x = float(scaling_variable(p, d, p_th, nu))
            clean = float(np.polynomial.polynomial.polyval(x, coefficients))
            sigma = max(noise * abs(clean), 1e-12)
            value = min(max(clean + sigma * rng.normal(), 0.0), 1.0)
            points.append(ScalingPoint(p=p, d=d, p_l=value, sigma=sigma))
    return points
