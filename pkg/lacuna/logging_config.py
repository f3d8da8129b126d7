"""Logging setup for the ``lacuna`` command line.

Log records go to stderr only; stdout carries the JSON/CSV report, so a
pipeline like ``lacuna omega | jq`` never sees a log line. The handler is
attached to the ``"lacuna"`` logger rather than the root logger, which leaves
the logging of a host application untouched when lacuna is used as a library.
``rich`` colorizes the output when it is installed (the ``pretty`` extra).
"""

from __future__ import annotations

import logging
import sys

LOGGER_NAME = "lacuna"
LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

_handler: logging.Handler | None = None


def parse_level(level: int | str) -> int:
    """``"info"``, ``"INFO"`` or ``logging.INFO`` to the numeric level."""
    if isinstance(level, int):
        return level
    name = level.strip().upper()
    if name not in LEVELS:
        raise ValueError(f"unknown log level {level!r}; expected one of {', '.join(LEVELS)}")
    return getattr(logging, name)


def _make_handler(use_rich: bool) -> logging.Handler:
    if use_rich:
        try:
            from rich.console import Console
            from rich.logging import RichHandler
        except ImportError:
            pass
        else:
            handler: logging.Handler = RichHandler(
                console=Console(stderr=True), rich_tracebacks=True, show_path=False
            )
            handler.setFormatter(logging.Formatter("%(message)s", datefmt="[%X]"))
            return handler

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(
        logging.Formatter("%(asctime)s %(levelname)-8s %(name)s: %(message)s", "%H:%M:%S")
    )
    return handler


def setup_logging(level: int | str = logging.WARNING, use_rich: bool = True) -> logging.Logger:
    """Route ``lacuna.*`` records to stderr at ``level`` and return the package logger.

    Calling it again swaps the handler instead of stacking a second one, so
    repeated in-process ``main()`` calls log each record once, to whatever
    ``sys.stderr`` is at the time of the call.
    """
    global _handler

    logger = logging.getLogger(LOGGER_NAME)
    if _handler is not None:
        logger.removeHandler(_handler)
        _handler.close()

    _handler = _make_handler(use_rich)
    logger.addHandler(_handler)
    logger.setLevel(parse_level(level))
    logger.propagate = False
    return logger
