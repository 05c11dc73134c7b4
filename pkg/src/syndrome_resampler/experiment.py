"""Grid runs over (d, p, method, alpha, c) with CSV, manifest and report outputs.

Every seed used below is derived from the master seed and the grid position, so
re-running a config reproduces the output files byte for byte.
"""

import json
import logging
from importlib import metadata
from pathlib import Path
from typing import Any

import numpy as np
from pydantic import BaseModel

from syndrome_resampler import __version__
from syndrome_resampler.analysis import BatchEstimator, DegenerateInputError, bootstrap_estimate
from syndrome_resampler.codes import build_code
from syndrome_resampler.config import default_workers
from syndrome_resampler.errors import ExperimentError, ResamplerError
from syndrome_resampler.models import (
    CgpsConfig,
    CodeSpec,
    DecoderConfig,
    Estimate,
    EstimationMethod,
    ExperimentConfig,
    NoiseModel,
    SampleBatch,
)
from syndrome_resampler.noise import run_batch
from syndrome_resampler.postselect import cgps_filter, combined_sr_cgps, ps_estimate
from syndrome_resampler.reports import MarkdownReporter
from syndrome_resampler.resampling import (
    EmptyAfterDiscardError,
    plain_estimate,
    resample_workflow,
    sr_estimate_batch,
)
from syndrome_resampler.serialization import format_probability, load_code, write_rows

logger = logging.getLogger(__name__)

CSV_COLUMNS = [
    "d",
    "p",
    "method",
    "alpha",
    "c",
    "p_L",
    "std_error",
    "ci_low",
    "ci_high",
    "acceptance",
    "N",
]
_DEPENDENCIES = ("numpy", "scipy", "networkx", "pymatching", "pydantic")


class ExperimentOutputs(BaseModel):
    csv: Path
    manifest: Path
    report: Path
    rows: list[dict[str, Any]]
    skipped: list[dict[str, Any]]


def derive_seed(master: int, *position: int) -> int:
    """Seed for one grid position, independent across positions."""
    state = np.random.SeedSequence(master, spawn_key=tuple(position)).generate_state(2)
    return int(state[0]) << 32 | int(state[1])


def _versions() -> dict[str, str]:
    versions = {"syndrome-resampler": __version__}
    for name in _DEPENDENCIES:
        try:
            versions[name] = metadata.version(name)
        except metadata.PackageNotFoundError:
            versions[name] = "unknown"
    return versions


def _codes(config: ExperimentConfig) -> list[CodeSpec]:
    if config.code_file is not None:
        return [load_code(config.code_file)]
    return [build_code(config.layout, d) for d in config.distances]


Cell = tuple[EstimationMethod, float | None, float | None, tuple[int, ...], BatchEstimator]


def _estimators(config: ExperimentConfig, code: CodeSpec) -> list[Cell]:
    """(method, alpha, c, grid position, estimator) for every requested combination."""
    cells: list[Cell] = []
    for m_index, method in enumerate(config.methods):
        if method is EstimationMethod.PLAIN:
            cells.append((method, None, None, (m_index,), lambda b, _: plain_estimate(b)))
        elif method is EstimationMethod.PS:
            cells.append((method, None, None, (m_index,), lambda b, _: ps_estimate(b)))
        elif method is EstimationMethod.SR_EXACT:
            for a_index, alpha in enumerate(config.alphas):
                cells.append(
                    (
                        method,
                        alpha,
                        None,
                        (m_index, a_index),
                        lambda b, _, a=alpha: sr_estimate_batch(b, a),
                    )
                )
        elif method is EstimationMethod.SR_EMPIRICAL:
            for a_index, alpha in enumerate(config.alphas):
                cells.append(
                    (
                        method,
                        alpha,
                        None,
                        (m_index, a_index),
                        lambda b, rng, a=int(alpha): resample_workflow(
                            b, a, config.n_tilde, rng=rng
                        )[0],
                    )
                )
        elif method is EstimationMethod.CGPS:
            for c_index, c in enumerate(config.confidences):
                cfg = CgpsConfig(confidence=c, distance=code.distance)
                cells.append(
                    (
                        method,
                        None,
                        c,
                        (m_index, c_index),
                        lambda b, _, cfg=cfg: cgps_filter(b, cfg)[1],
                    )
                )
        elif method is EstimationMethod.COMBINED:
            for a_index, alpha in enumerate(config.alphas):
                for c_index, c in enumerate(config.confidences):
                    cfg = CgpsConfig(confidence=c, distance=code.distance)
                    cells.append(
                        (
                            method,
                            alpha,
                            c,
                            (m_index, a_index, c_index),
                            lambda b, rng, a=int(alpha), cfg=cfg: combined_sr_cgps(
                                b, a, cfg, config.n_tilde, rng=rng
                            ),
                        )
                    )
    return cells


def _evaluate(
    config: ExperimentConfig, batch: SampleBatch, estimator: BatchEstimator, seed: int
) -> Estimate:
    """Point estimate, with a bootstrap interval unless ``n_bootstrap`` is 0."""
    point = estimator(batch, np.random.Generator(np.random.Philox(seed)))
    if config.n_bootstrap == 0:
        return point
    try:
        return bootstrap_estimate(
            batch, estimator, config.n_bootstrap, config.ci_level, seed=seed, point=point
        )
    except DegenerateInputError as e:
        logger.warning("no bootstrap interval for %s: %s", point.method.value, e)
        return point


def run_experiment(
    config: ExperimentConfig, workers: int | None = None, output_dir: Path | None = None
) -> ExperimentOutputs:
    """Run the config grid and write ``results.csv``, ``manifest.json`` and ``report.md``.

    Raises:
        ExperimentError: On any stage failure, naming the stage and its parameters.
    """
    workers = workers or config.workers or default_workers()
    out_dir = Path(output_dir or config.output_dir) / config.name
    decoder_cfg = DecoderConfig(
        method=config.decoder,
        backend=config.backend,
        with_gap=config.needs_gap,
        with_exact_prob=config.needs_exact_prob,
    )

    try:
        codes = _codes(config)
    except ResamplerError as e:
        raise ExperimentError("codegen", {"layout": config.layout.value}, e) from e

    rows: list[dict[str, Any]] = []
    skipped: list[dict[str, Any]] = []
    seeds: dict[str, int] = {}
    for code in codes:
        for p_index, p in enumerate(config.p_grid):
            batch_seed = derive_seed(config.seed, code.distance, p_index)
            seeds[f"d={code.distance},p={format_probability(p)}"] = batch_seed
            params = {"d": code.distance, "p": p, "n_samples": config.n_samples}
            logger.info("simulating d=%d p=%g", code.distance, p)
            try:
                batch = run_batch(
                    code, NoiseModel(p=p), config.n_samples, decoder_cfg, batch_seed, workers
                )
            except ResamplerError as e:
                raise ExperimentError("simulate", params, e) from e

            for method, alpha, c, position, estimator in _estimators(config, code):
                key = {"d": code.distance, "p": p, "method": method.value, "alpha": alpha, "c": c}
                seed = derive_seed(config.seed, code.distance, p_index, *[i + 1 for i in position])
                try:
                    result = _evaluate(config, batch, estimator, seed)
                except EmptyAfterDiscardError as e:
                    logger.warning("skipping %s: %s", key, e)
                    skipped.append({**key, "reason": str(e)})
                    continue
                except ResamplerError as e:
                    raise ExperimentError(method.value, key, e) from e
                rows.append(
                    {
                        **key,
                        "p_L": result.value,
                        "std_error": result.std_error,
                        "ci_low": result.ci_low,
                        "ci_high": result.ci_high,
                        "acceptance": result.acceptance,
                        "N": result.n_samples,
                    }
                )

    manifest = {
        "name": config.name,
        "version": __version__,
        "layout": config.layout.value,
        "code_file": None if config.code_file is None else str(config.code_file),
        "distances": [code.distance for code in codes],
        "p_grid": config.p_grid,
        "n_samples": config.n_samples,
        "seed": config.seed,
        "decoder": config.decoder.value,
        "backend": config.backend.value,
        "methods": [m.value for m in config.methods],
        "alphas": config.alphas,
        "confidences": config.confidences,
        "n_tilde": config.n_tilde,
        "n_bootstrap": config.n_bootstrap,
        "ci_level": config.ci_level,
        "batch_seeds": seeds,
        "versions": _versions(),
    }
    csv_path = write_rows(out_dir / "results.csv", CSV_COLUMNS, rows)
    manifest_path = out_dir / "manifest.json"
    manifest_path.write_text(json.dumps(manifest, indent=2) + "\n")
    report_path = MarkdownReporter(
        {"manifest": manifest, "rows": rows, "skipped": skipped}
    ).write(out_dir / "report.md")
    logger.info("wrote %d rows to %s", len(rows), csv_path)
    return ExperimentOutputs(
        csv=csv_path, manifest=manifest_path, report=report_path, rows=rows, skipped=skipped
    )
