"""Ingestion of recorded syndrome data."""

from .base import (
    BaseRecordParser,
    EmptyInputError,
    IngestError,
    IngestNetworkError,
    RecordFormatError,
    RecordParseError,
)
from .jsonl import SUPPORTED_FORMATS, JsonlRecordParser, ingest_records

__all__ = [
    "BaseRecordParser",
    "EmptyInputError",
    "IngestError",
    "IngestNetworkError",
    "RecordFormatError",
    "RecordParseError",
    "SUPPORTED_FORMATS",
    "JsonlRecordParser",
    "ingest_records",
]
