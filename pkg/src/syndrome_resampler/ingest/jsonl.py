"""JSON-lines ingestion of simulated batch files and external shot records."""

import asyncio
import json
import logging
from pathlib import Path
from typing import Any

import httpx
import numpy as np
from pydantic import ValidationError

from syndrome_resampler.ingest.base import (
    BaseRecordParser,
    EmptyInputError,
    IngestError,
    IngestNetworkError,
    RecordFormatError,
    RecordParseError,
)
from syndrome_resampler.models import (
    MISSING,
    ExternalRecord,
    LogicalClass,
    SampleBatch,
    SampleRecord,
)

logger = logging.getLogger(__name__)

SUPPORTED_FORMATS = ("jsonl",)


class JsonlRecordParser(BaseRecordParser):
    """Parser for JSON-lines records.

    Supports:
    - batch files written by ``simulate`` (header line, then SampleRecord lines)
    - external records (ExternalRecord lines, no header)
    - URL or file path sources
    """

    def __init__(self, source: str | Path):
        super().__init__(source)
        self.header: dict[str, Any] | None = None

    async def parse(self) -> SampleBatch:
        """Parse records into a batch with keys in sorted order."""
        text = await self._load()
        lines = [(i, line) for i, line in enumerate(text.splitlines(), start=1) if line.strip()]
        if not lines:
            raise EmptyInputError(f"No records in {self.source}")

        first = self._decode(*lines[0])
        if first.get("kind") == "header":
            self.header = first
            lines = lines[1:]
            if not lines:
                raise EmptyInputError(f"Batch file {self.source} has a header but no records")
        records = [self._record(i, self._decode(i, line)) for i, line in lines]
        return self._build(records)

    async def _load(self) -> str:
        if self.is_url(self.source):
            try:
                async with httpx.AsyncClient() as client:
                    response = await client.get(self.source, timeout=30.0)
                    response.raise_for_status()
                    return response.text
            except httpx.HTTPError as e:
                raise IngestNetworkError(f"Failed to fetch records: {e}") from e
        if self.is_file(self.source):
            return Path(self.source).read_text()
        raise IngestError(f"Source not found: {self.source}")

    @staticmethod
    def _decode(line_no: int, line: str) -> dict[str, Any]:
        try:
            value = json.loads(line)
        except json.JSONDecodeError as e:
            raise RecordParseError(line_no, f"invalid JSON: {e.msg}") from e
        if not isinstance(value, dict):
            raise RecordParseError(line_no, "record must be a JSON object")
        return value

    def _record(self, line_no: int, raw: dict[str, Any]) -> SampleRecord | ExternalRecord:
        try:
            if self.header is not None:
                return SampleRecord.model_validate(raw)
            return ExternalRecord.model_validate(raw)
        except ValidationError as e:
            raise RecordParseError(line_no, str(e.errors()[0]["msg"])) from e

    def _build(self, records: list[SampleRecord | ExternalRecord]) -> SampleBatch:
        widths = {len(r.syndrome) for r in records}
        if len(widths) != 1:
            raise RecordFormatError(
                f"Inconsistent syndrome widths in {self.source}: {sorted(widths)}"
            )
        key_bytes = widths.pop() // 2
        header = self.header or {}
        if "key_bytes" in header and header["key_bytes"] != key_bytes:
            raise RecordFormatError(
                f"Header declares {header['key_bytes']} key bytes, records have {key_bytes}"
            )
        if "n" in header and header["n"] != len(records):
            raise RecordFormatError(f"Header declares {header['n']} records, found {len(records)}")

        keys = tuple(sorted({r.syndrome for r in records}))
        position = {k: i for i, k in enumerate(keys)}

        def _int_column(values: list[int | None]) -> np.ndarray | None:
            if all(v is None for v in values):
                return None
            return np.array([MISSING if v is None else v for v in values], dtype=np.int64)

        gap = _int_column([r.gap for r in records])
        decoder_class = w_mwpm = w_comp = p_s = None
        distance = header.get("distance")
        if self.header is not None:
            decoder_class = _int_column(
                [
                    None if r.decoder_class is None else LogicalClass(r.decoder_class).bit
                    for r in records
                ]
            )
            w_mwpm = _int_column([r.w_mwpm for r in records])
            w_comp = _int_column([r.w_comp for r in records])
            if any(r.p_s is not None for r in records):
                p_s = np.array([np.nan if r.p_s is None else r.p_s for r in records])
        else:
            distances = {r.d for r in records if r.d is not None}
            if len(distances) > 1:
                raise RecordFormatError(f"Records mix code distances {sorted(distances)}")
            distance = distances.pop() if distances else None

        logger.info(
            "ingested %d records (%d distinct syndromes) from %s",
            len(records),
            len(keys),
            self.source,
        )
        p = header.get("p")
        return SampleBatch(
            code_id=header.get("code_id"),
            p=None if p is None else float(p),
            seed=header.get("seed"),
            distance=distance,
            key_bytes=key_bytes,
            keys=keys,
            syndrome_index=np.array([position[r.syndrome] for r in records], dtype=np.int64),
            failures=np.array([r.x for r in records], dtype=np.uint8),
            decoder_class=None if decoder_class is None else decoder_class.astype(np.int8),
            w_mwpm=w_mwpm,
            w_comp=w_comp,
            gap=gap,
            p_s=p_s,
        )


def ingest_records(source: str | Path, format: str = "jsonl") -> SampleBatch:
    """Read records from a file path or http(s) URL into a :class:`SampleBatch`.

    Raises:
        RecordFormatError: For an unsupported format or inconsistent records.
        RecordParseError: For a malformed line (carries the line number).
        EmptyInputError: If the source holds no records.
    """
    if format not in SUPPORTED_FORMATS:
        raise RecordFormatError(
            f"Unsupported record format '{format}'; use one of {SUPPORTED_FORMATS}"
        )
    return asyncio.run(JsonlRecordParser(source).parse())
