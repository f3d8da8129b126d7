"""CSV input for the ``sieve`` and ``decay-check`` subcommands."""

from __future__ import annotations

import csv
import logging
import math
from fractions import Fraction
from pathlib import Path

from ..errors import InputFormatError
from ..exact import parse_rational
from ..trig import CoefficientPair

logger = logging.getLogger(__name__)

SERIES_FIELDS = ("n", "a", "b")


def read_sizes(path: str | Path) -> list[Fraction]:
    """Rationals (``p/q`` or decimal), one per line or comma separated.

    Blank lines and lines starting with ``#`` are skipped.
    """
    values: list[Fraction] = []
    with open(path, newline="") as f:
        for line_no, row in enumerate(csv.reader(f), 1):
            if not row or row[0].lstrip().startswith("#"):
                continue
            for cell in row:
                if not cell.strip():
                    continue
                try:
                    values.append(parse_rational(cell))
                except InputFormatError as e:
                    e.details["line"] = line_no
                    raise
    logger.info("Read %d sizes from %s", len(values), path)
    return values


def read_series(path: str | Path) -> list[CoefficientPair]:
    """Coefficient pairs from a CSV with header ``n,a,b``."""
    with open(path, newline="") as f:
        reader = csv.DictReader(f)
        header = [h.strip() for h in reader.fieldnames or []]
        if tuple(header[:3]) != SERIES_FIELDS:
            raise InputFormatError(
                f"series CSV needs header n,a,b; got {','.join(header)!r}", path=str(path)
            )
        reader.fieldnames = header
        pairs = []
        for line_no, row in enumerate(reader, 2):
            try:
                n, a, b = int(row["n"]), float(row["a"]), float(row["b"])
            except (TypeError, ValueError) as e:
                raise InputFormatError(
                    f"bad series row at line {line_no}: {row!r}", line=line_no
                ) from e
            if not (math.isfinite(a) and math.isfinite(b)):
                raise InputFormatError(
                    f"non-finite coefficient at line {line_no}: {row!r}", line=line_no
                )
            pairs.append(CoefficientPair(n, a, b))
    logger.info("Read %d coefficient pairs from %s", len(pairs), path)
    return pairs
