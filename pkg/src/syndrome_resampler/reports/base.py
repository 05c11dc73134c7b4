"""Base reporter interface."""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any

from syndrome_resampler.errors import ResamplerError


class BaseReporter(ABC):
    """Abstract base class for run reporters."""

    def __init__(self, context: dict[str, Any]):
        """Initialize reporter with the run context.

        Args:
            context: Manifest and result rows of an experiment run
        """
        self.context = context

    @abstractmethod
    def render(self) -> str:
        """Render the report as text."""
        pass

    def write(self, path: Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.render())
        return path


class ReportError(ResamplerError):
    """Base exception for report errors."""

    pass
