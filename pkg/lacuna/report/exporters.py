"""Report writers.

Both exporters use only the standard library (``json`` / ``csv``). They write
to a file path, creating parent directories, or to a text stream (stdout by
default). JSON is the canonical format; CSV carries the flat tables (Theta
table, resonance rows, sieve passes, decay rows) for spreadsheets and plots.
"""

from __future__ import annotations

import csv
import json
import sys
from pathlib import Path
from typing import IO, Any

from .serialize import Report


class _Output:
    """Owns the destination stream; closes it only if it opened it."""

    def __init__(self, path: str | Path | None, stream: IO[str] | None = None):
        self.path = Path(path) if path is not None else None
        if self.path is not None:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self._file: IO[str] = open(self.path, "w", newline="")  # noqa: SIM115
            self._owned = True
        else:
            self._file = stream or sys.stdout
            self._owned = False

    def close(self) -> None:
        if self._owned:
            self._file.close()
        else:
            self._file.flush()


class JSONExporter(_Output):
    def write(self, report: Report) -> None:
        self._file.write(json.dumps(report.document(), indent=2, allow_nan=False) + "\n")


class CSVExporter(_Output):
    """Writes ``report.table``; the header comes from ``report.columns`` so an
    empty table still yields a header row."""

    def write(self, report: Report) -> None:
        rows: list[dict[str, Any]] = report.table or []
        columns = list(report.columns or (rows[0] if rows else ()))
        if not columns:
            return
        writer = csv.DictWriter(self._file, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)


def exporter_for(fmt: str, path: str | Path | None, stream: IO[str] | None = None):
    if fmt == "csv":
        return CSVExporter(path, stream)
    if fmt == "json":
        return JSONExporter(path, stream)
    raise ValueError(f"unknown report format {fmt!r}")
