"""Runtime settings and experiment-config loading."""

import os
from pathlib import Path

import yaml
from dotenv import load_dotenv
from pydantic import ValidationError

from syndrome_resampler.errors import ResamplerError
from syndrome_resampler.models import ExperimentConfig

WORKERS_ENV = "SRESAMPLE_WORKERS"
LOG_LEVEL_ENV = "SRESAMPLE_LOG_LEVEL"


class ConfigError(ResamplerError):
    """Raised when a configuration file or environment value is invalid."""

    pass


def load_environment(dotenv_path: str | Path | None = None) -> None:
    """Load a ``.env`` file (if present) without overriding the real environment."""
    load_dotenv(dotenv_path=dotenv_path, override=False)


def default_workers() -> int:
    """Worker count from ``SRESAMPLE_WORKERS`` (default 1)."""
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        workers = int(raw)
    except ValueError as e:
        raise ConfigError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from e
    if workers < 1:
        raise ConfigError(f"{WORKERS_ENV} must be >= 1, got {workers}")
    return workers


def default_log_level() -> str:
    return os.environ.get(LOG_LEVEL_ENV, "WARNING").upper()


def load_experiment_config(path: str | Path) -> ExperimentConfig:
    """Read a YAML (or JSON) experiment file into an :class:`ExperimentConfig`."""
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"Config not found: {path}")
    try:
        raw = yaml.safe_load(path.read_text())
    except yaml.YAMLError as e:
        raise ConfigError(f"Failed to parse config {path}: {e}") from e
    if not isinstance(raw, dict):
        raise ConfigError(f"Config {path} must be a mapping at top level")
    try:
        return ExperimentConfig.model_validate(raw)
    except ValidationError as e:
        raise ConfigError(f"Invalid experiment config {path}:\n{e}") from e
