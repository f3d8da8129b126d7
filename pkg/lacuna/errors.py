"""Exception hierarchy shared by every lacuna module.

Each error carries a stable ``code`` string that the CLI passes through
verbatim in its machine-readable error object, plus a ``details`` dict with
whatever context identifies the failure (an index, a failed comparison, ...).
"""

from __future__ import annotations

from typing import Any


class LacunaError(Exception):
    """Base class for all domain errors raised by lacuna."""

    code = "lacuna-error"

    def __init__(self, message: str, *, code: str | None = None, **details: Any):
        super().__init__(message)
        if code is not None:
            self.code = code
        self.details: dict[str, Any] = details

    def to_dict(self) -> dict[str, Any]:
        return {
            "code": self.code,
            "message": str(self),
            "details": {k: _plain(v) for k, v in self.details.items()},
        }


def _plain(value: Any) -> Any:
    """Make a detail value JSON-friendly (big ints and rationals become strings)."""
    if isinstance(value, bool) or value is None or isinstance(value, float | str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, list | tuple):
        return [_plain(v) for v in value]
    return str(value)


class ArithmeticDomainError(LacunaError):
    """Zero denominators, inverted enclosures."""


class InputFormatError(LacunaError):
    """Unparseable rational or series input."""

    code = "bad-input"


class SequenceError(LacunaError):
    """A prefix that violates the super-lacunary growth law."""


class DepthError(LacunaError):
    """The prefix is too short to certify the requested statement."""

    code = "insufficient-depth"


class TargetError(LacunaError):
    """Bad target subdivision or a prefix that cannot reach it."""


class SieveError(LacunaError):
    """Bad ladder or selector for the deletion sieve."""


class SeriesError(LacunaError):
    """Malformed trigonometric series or evaluation grid."""
