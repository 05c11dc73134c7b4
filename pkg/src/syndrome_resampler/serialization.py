"""Reading and writing of batches, joint tables, estimates, fits and curve tables.

Records are JSON lines, curves are CSV, everything else is JSON. Probabilities that
feed later computations are written as decimal strings with 17 significant digits.
"""

import csv
import json
from collections.abc import Iterable, Mapping, Sequence
from pathlib import Path
from typing import Any

import numpy as np
from pydantic import BaseModel, ValidationError

from syndrome_resampler.errors import ResamplerError
from syndrome_resampler.models import (
    MISSING,
    CodeSpec,
    Estimate,
    JointDistribution,
    JointMethod,
    SampleBatch,
    ScalingFit,
    ScalingPoint,
    key_to_index,
)


class SerializationError(ResamplerError):
    """Raised when an artifact file cannot be written or read back."""

    pass


def format_probability(value: float) -> str:
    return format(float(value), ".17g")


def batch_header(batch: SampleBatch) -> dict[str, Any]:
    return {
        "kind": "header",
        "code_id": batch.code_id,
        "p": None if batch.p is None else format_probability(batch.p),
        "seed": batch.seed,
        "n": batch.n,
        "key_bytes": batch.key_bytes,
        "distance": batch.distance,
    }


def iter_batch_lines(batch: SampleBatch) -> Iterable[str]:
    """JSON lines of a batch file: a header, then one line per record in order."""
    yield json.dumps(batch_header(batch))
    columns = {
        name: getattr(batch, name) for name in ("decoder_class", "w_mwpm", "w_comp", "gap")
    }
    for i in range(batch.n):
        row: dict[str, Any] = {
            "syndrome": batch.keys[batch.syndrome_index[i]],
            "x": int(batch.failures[i]),
        }
        for name, column in columns.items():
            if column is not None and column[i] != MISSING:
                value = int(column[i])
                row[name] = ("X" if value else "I") if name == "decoder_class" else value
        if batch.p_s is not None and np.isfinite(batch.p_s[i]):
            row["p_s"] = format_probability(batch.p_s[i])
        yield json.dumps(row)


def write_batch(batch: SampleBatch, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w") as fh:
        for line in iter_batch_lines(batch):
            fh.write(line + "\n")
    return path


def write_joint(joint: JointDistribution, path: str | Path) -> Path:
    """Supported rows of a joint table as JSON, or CSV when the suffix is ``.csv``."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    rows = [
        (key, format_probability(p_i), format_probability(p_x)) for key, (p_i, p_x) in joint.items()
    ]
    if path.suffix == ".csv":
        with path.open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["syndrome", "p_I", "p_X"])
            writer.writerows(rows)
        return path
    payload = {
        "code_id": joint.code_id,
        "p": format_probability(joint.p),
        "num_checks": joint.num_checks,
        "method": joint.method.value,
        "rows": rows,
    }
    path.write_text(json.dumps(payload, indent=2) + "\n")
    return path


def read_joint(path: str | Path) -> JointDistribution:
    """Read a JSON joint table written by :func:`write_joint`."""
    path = Path(path)
    try:
        payload = json.loads(path.read_text())
        num_checks = int(payload["num_checks"])
        table = np.zeros((1 << num_checks, 2))
        for key, p_i, p_x in payload["rows"]:
            table[key_to_index(key)] = (float(p_i), float(p_x))
        return JointDistribution(
            code_id=payload["code_id"],
            p=float(payload["p"]),
            num_checks=num_checks,
            method=JointMethod(payload["method"]),
            table=table,
        )
    except (OSError, KeyError, ValueError, TypeError) as e:
        raise SerializationError(f"Failed to read joint table {path}: {e}") from e


def write_model(model: BaseModel, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(model.model_dump_json(indent=2) + "\n")
    return path


def _read_model(cls: type[BaseModel], path: str | Path) -> Any:
    path = Path(path)
    try:
        return cls.model_validate_json(path.read_text())
    except (OSError, ValidationError) as e:
        raise SerializationError(f"Failed to read {cls.__name__} from {path}: {e}") from e


def read_estimate(path: str | Path) -> Estimate:
    return _read_model(Estimate, path)


def read_fit(path: str | Path) -> ScalingFit:
    return _read_model(ScalingFit, path)


def write_rows(
    path: str | Path, columns: Sequence[str], rows: Iterable[Mapping[str, Any]]
) -> Path:
    """CSV with a fixed column order; floats keep 17 significant digits."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow(
                [
                    format_probability(row[c]) if isinstance(row[c], float) else row[c]
                    for c in columns
                ]
            )
    return path


def _read_csv(path: str | Path) -> list[dict[str, str]]:
    path = Path(path)
    try:
        with path.open(newline="") as fh:
            return list(csv.DictReader(fh))
    except OSError as e:
        raise SerializationError(f"Failed to read {path}: {e}") from e


def read_scaling_points(path: str | Path) -> list[ScalingPoint]:
    """Collapse input: CSV columns p, d, p_L and sigma (or std_error, as in results.csv)."""
    try:
        return [
            ScalingPoint(
                p=float(r["p"]),
                d=int(r["d"]),
                p_l=float(r["p_L"]),
                sigma=float(r["sigma"] if "sigma" in r else r["std_error"]),
            )
            for r in _read_csv(path)
        ]
    except (KeyError, ValueError, ValidationError) as e:
        raise SerializationError(f"Bad scaling-point table {path}: {e}") from e


def read_curve(path: str | Path, value_column: str | None = None) -> list[tuple[float, float]]:
    """(p, value) pairs from a CSV with a ``p`` column and one value column.

    Without ``value_column`` the first column other than ``p`` is used.
    """
    rows = _read_csv(path)
    if not rows:
        raise SerializationError(f"Curve file {path} has no rows")
    column = value_column or next(c for c in rows[0] if c != "p")
    try:
        return [(float(r["p"]), float(r[column])) for r in rows]
    except (KeyError, ValueError) as e:
        raise SerializationError(f"Bad curve table {path}: {e}") from e


def write_code(code: CodeSpec, path: str | Path) -> Path:
    return write_model(code, path)


def load_code(path: str | Path) -> CodeSpec:
    """Read a code written by ``codegen``."""
    return _read_model(CodeSpec, path)
