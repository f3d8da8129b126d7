"""Report subpackage: serialization, readers, and JSON/CSV writers used by the CLI."""

from .exporters import CSVExporter, JSONExporter, exporter_for
from .readers import read_series, read_sizes
from .serialize import (
    Report,
    decimal_approx,
    parse_serialized_rational,
    serialize_enclosure,
    serialize_rational,
)

__all__ = [
    "Report",
    "serialize_rational",
    "parse_serialized_rational",
    "serialize_enclosure",
    "decimal_approx",
    "read_sizes",
    "read_series",
    "JSONExporter",
    "CSVExporter",
    "exporter_for",
]
