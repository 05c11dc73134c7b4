"""Base parser interface for recorded syndrome data."""

from abc import ABC, abstractmethod
from pathlib import Path

from syndrome_resampler.errors import ResamplerError
from syndrome_resampler.models import SampleBatch


class BaseRecordParser(ABC):
    """Abstract base class for record parsers.

    Parsers turn a file or URL of per-shot records into a :class:`SampleBatch` that
    every estimator accepts unchanged.
    """

    def __init__(self, source: str | Path):
        """Initialize parser with source.

        Args:
            source: URL or file path of the records
        """
        self.source = str(source)

    @abstractmethod
    async def parse(self) -> SampleBatch:
        """Parse the source into a batch.

        Raises:
            IngestError: If reading or parsing fails
        """
        pass

    def is_url(self, source: str) -> bool:
        """Check if source is a URL."""
        return source.startswith("http://") or source.startswith("https://")

    def is_file(self, source: str) -> bool:
        """Check if source is a file path."""
        return Path(source).exists()


class IngestError(ResamplerError):
    """Base exception for ingestion errors."""

    pass


class RecordParseError(IngestError):
    """Raised when a line is not a well-formed record; ``line`` is 1-based."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class RecordFormatError(IngestError):
    """Raised when records are individually valid but inconsistent with each other."""

    pass


class EmptyInputError(IngestError):
    """Raised when a source holds no records."""

    pass


class IngestNetworkError(IngestError):
    """Raised when a network request fails."""

    pass
