"""Structural checks on a CodeSpec, reported rather than raised."""

import numpy as np

from syndrome_resampler.models import (
    CheckStatus,
    CodeSpec,
    Layout,
    ValidationCheck,
    ValidationReport,
)

BRUTE_FORCE_MAX_QUBITS = 26
BRUTE_FORCE_MAX_DISTANCE = 5
BRUTE_FORCE_MAX_GENERATORS = 20


def _check(name: str, ok: bool, detail: str | None = None) -> ValidationCheck:
    return ValidationCheck(
        name=name, status=CheckStatus.PASSED if ok else CheckStatus.FAILED, detail=detail
    )


def _overlap_parities(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a.astype(np.int64) @ b.astype(np.int64).T) % 2


def _expected_counts(code: CodeSpec) -> tuple[int, int | None, int]:
    """(n, Z-check count or None if layout-dependent, total stabilizers)."""
    d = code.distance
    if code.layout is Layout.UNROTATED:
        return d * d + (d - 1) ** 2, d * (d - 1), 2 * d * (d - 1)
    z_count = (d * d - 1) // 2 if d % 2 else None
    return d * d, z_count, d * d - 1


def coset_min_weight(code: CodeSpec) -> int:
    """Minimum weight over x_logical + span(x_checks), by enumeration."""
    generators = code.x_check_matrix().astype(np.int64)
    r = generators.shape[0]
    combos = (np.arange(1 << r, dtype=np.int64)[:, None] >> np.arange(r)) & 1
    group = (combos @ generators) % 2
    coset = group ^ code.x_logical_mask().astype(np.int64)
    return int(coset.sum(axis=1).min())


def validate_code(
    code: CodeSpec, max_bruteforce_qubits: int = BRUTE_FORCE_MAX_QUBITS
) -> ValidationReport:
    """Check every CodeSpec invariant and return a report.

    The brute-force distance check is skipped (and reported as skipped) when the
    code is larger than the enumeration budget.
    """
    report = ValidationReport(code_id=code.code_id)
    checks = report.checks

    in_range = all(
        0 <= q < code.n
        for support in (*code.z_checks, *code.x_checks, code.x_logical, code.z_logical)
        for q in support
    )
    checks.append(_check("indices_in_range", in_range))
    if not in_range:
        return report

    n_expected, z_expected, total_expected = _expected_counts(code)
    checks.append(
        _check("qubit_count", code.n == n_expected, f"n={code.n}, expected {n_expected}")
    )
    if z_expected is not None:
        checks.append(
            _check(
                "z_check_count",
                code.num_checks == z_expected,
                f"{code.num_checks} Z checks, expected {z_expected}",
            )
        )
    total = len(code.z_checks) + len(code.x_checks)
    checks.append(
        _check("stabilizer_count", total == total_expected, f"{total}, expected {total_expected}")
    )
    checks.append(_check("logical_qubits", code.k == 1, f"k={code.k}"))

    hz = code.z_check_matrix()
    hx = code.x_check_matrix()
    x_log = code.x_logical_mask()[None, :]
    z_log = code.z_logical_mask()[None, :]

    bad_pairs = int(_overlap_parities(hz, hx).sum())
    checks.append(
        _check("checks_commute", bad_pairs == 0, f"{bad_pairs} anticommuting Z/X check pairs")
    )
    bad_x = np.flatnonzero(_overlap_parities(hz, x_log)[:, 0]).tolist()
    checks.append(
        _check(
            "x_logical_commutes",
            not bad_x,
            f"x_logical anticommutes with Z checks {bad_x}" if bad_x else None,
        )
    )
    bad_z = np.flatnonzero(_overlap_parities(hx, z_log)[:, 0]).tolist()
    checks.append(
        _check(
            "z_logical_commutes",
            not bad_z,
            f"z_logical anticommutes with X checks {bad_z}" if bad_z else None,
        )
    )
    overlap = len(set(code.x_logical) & set(code.z_logical))
    checks.append(
        _check("logicals_anticommute", overlap % 2 == 1, f"logical overlap {overlap}")
    )

    degrees = hz.sum(axis=0)
    checks.append(
        _check(
            "graph_degree",
            bool(((degrees >= 1) & (degrees <= 2)).all()),
            "every qubit must lie in one or two Z checks",
        )
    )

    if (
        code.distance <= BRUTE_FORCE_MAX_DISTANCE
        and code.n <= max_bruteforce_qubits
        and len(code.x_checks) <= BRUTE_FORCE_MAX_GENERATORS
    ):
        weight = coset_min_weight(code)
        checks.append(
            _check(
                "code_distance",
                weight == code.distance,
                f"minimum logical-coset weight {weight}, expected {code.distance}",
            )
        )
    else:
        checks.append(
            ValidationCheck(
                name="code_distance",
                status=CheckStatus.SKIPPED,
                detail=f"n={code.n} exceeds brute-force budget of {max_bruteforce_qubits}",
            )
        )
    return report
