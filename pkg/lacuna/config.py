"""Typed configuration for the lacuna CLI.

Loads ``config.yaml`` into dataclasses so every subcommand reads its defaults
from one place. CLI flags override these defaults (see ``lacuna/cli.py``), and
``LACUNA_OUTPUT_DIR`` overrides ``report.output_dir``.

Uses only the standard library + ``pyyaml``.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, TypeVar

import yaml

logger = logging.getLogger(__name__)

OUTPUT_DIR_ENV = "LACUNA_OUTPUT_DIR"


def _default_config_path() -> Path:
    """./config.yaml when present, else the repo-root copy next to this package."""
    cwd_config = Path("config.yaml")
    if cwd_config.exists():
        return cwd_config
    return Path(__file__).resolve().parent.parent / "config.yaml"


DEFAULT_CONFIG_PATH = _default_config_path()


@dataclass
class SequenceConfig:
    depth: int = 6
    seed: int = 3


@dataclass
class TargetConfig:
    mu: int = 1
    nu: int = 1


@dataclass
class SieveConfig:
    levels: int = 10
    ladder: list[str] | None = None  # None = harmonic 1/k


@dataclass
class TrigConfig:
    s_range: str = "2..4"
    grid: int = 2048
    eps_term: float = 1e-6
    eps_rho: float = 1e-3


@dataclass
class ReportConfig:
    digits: int = 12
    format: str = "json"
    output_dir: str | None = None


T = TypeVar("T")


def _build(dc_type: type[T], data: dict[str, Any] | None) -> T:
    """Build a dataclass from a dict, ignoring unknown keys and filling
    missing keys with the dataclass defaults."""
    if not data:
        return dc_type()  # type: ignore[call-arg]
    known = {f.name for f in fields(dc_type)}  # type: ignore[arg-type]
    unknown = set(data) - known
    if unknown:
        logger.warning("Ignoring unknown config keys for %s: %s", dc_type.__name__, sorted(unknown))
    kwargs = {k: v for k, v in data.items() if k in known}
    return dc_type(**kwargs)  # type: ignore[call-arg]


@dataclass
class AppConfig:
    sequence: SequenceConfig = field(default_factory=SequenceConfig)
    target: TargetConfig = field(default_factory=TargetConfig)
    sieve: SieveConfig = field(default_factory=SieveConfig)
    trig: TrigConfig = field(default_factory=TrigConfig)
    report: ReportConfig = field(default_factory=ReportConfig)

    @classmethod
    def from_dict(cls, data: dict[str, Any] | None) -> AppConfig:
        data = data or {}
        return cls(
            sequence=_build(SequenceConfig, data.get("sequence")),
            target=_build(TargetConfig, data.get("target")),
            sieve=_build(SieveConfig, data.get("sieve")),
            trig=_build(TrigConfig, data.get("trig")),
            report=_build(ReportConfig, data.get("report")),
        )

    @classmethod
    def from_yaml(cls, path: Path) -> AppConfig:
        with open(path) as f:
            data = yaml.safe_load(f) or {}
        return cls.from_dict(data)


def load_config(path: Path | str | None = None) -> AppConfig:
    """Load configuration from YAML, falling back to defaults if absent.

    Args:
        path: Path to a YAML config file. Defaults to ``config.yaml``.

    Returns:
        A populated :class:`AppConfig` with the output-directory environment
        override applied.
    """
    path = Path(path) if path is not None else DEFAULT_CONFIG_PATH
    if not path.exists():
        logger.warning("Config file not found at %s; using built-in defaults", path)
        cfg = AppConfig()
    else:
        logger.info("Loaded configuration from %s", path)
        cfg = AppConfig.from_yaml(path)

    env_dir = os.environ.get(OUTPUT_DIR_ENV)
    if env_dir:
        logger.info("%s overrides output directory: %s", OUTPUT_DIR_ENV, env_dir)
        cfg.report.output_dir = env_dir
    return cfg
