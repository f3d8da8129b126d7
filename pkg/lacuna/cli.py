#!/usr/bin/env python3
"""
lacuna CLI: certified constructions around lacunary trigonometric series.

Usage (installed as the `lacuna` console script; `python main.py` also works):
    # The canonical lacunary prefix n_k = 2^k n_(k-1) + 1
    lacuna gen-seq --depth 6 --seed 3

    # Enclosure of Omega with the Theta decay table
    lacuna omega --depth 6 --seed 3 --theta-table

    # Steer Omega into [(mu-1)/nu, mu/nu]
    lacuna target --mu 3 --nu 2 --depth 8 --seed 3

    # Deletion sieve over a CSV of sizes
    lacuna sieve --input sizes.csv --levels 10 --format csv

    # Amplitude-phase form, resonance certificates, decay harness
    lacuna polar --a 3 --b 4
    lacuna resonance --depth 8 --seed 3 --s-range 2..6
    lacuna decay-check --series series.csv --alpha 0.1 --beta 3.0 --grid 2048

Defaults come from config.yaml (override with --config); any CLI flag you pass
takes precedence over the config file. Exit status: 0 success, 1 domain error
(an {"error": ...} object is written), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import IO, Any

from lacuna.config import AppConfig, load_config
from lacuna.errors import LacunaError
from lacuna.exact import parse_rational
from lacuna.logging_config import LEVELS, setup_logging
from lacuna.omega import approximants, omega_enclosure, theta_table
from lacuna.report import Report, exporter_for, read_series, read_sizes
from lacuna.report import serialize as ser
from lacuna.sequence import default_generator
from lacuna.sieve import Ladder, sieve, sizes
from lacuna.target import TargetSpec, targeted_omega
from lacuna.trig import decay_check, resonance_point, to_polar

logger = logging.getLogger("lacuna.cli")

COMMANDS = ("gen-seq", "omega", "target", "sieve", "polar", "resonance", "decay-check")
TABULAR = {"omega", "sieve", "resonance", "decay-check"}


class UsageError(Exception):
    """Bad flag values caught before dispatch (exit status 2)."""


@dataclass
class RunConfig:
    command: str
    depth: int = 6
    seed: int = 3
    mu: int = 1
    nu: int = 1
    theta_table: bool = False
    s_range: tuple[int, int] = (2, 4)
    levels: int = 10
    ladder: tuple[Fraction, ...] | None = None
    input: str | None = None
    series: str | None = None
    a: float = 0.0
    b: float = 0.0
    alpha: float = 0.0
    beta: float = 0.0
    grid: int = 2048
    eps_term: float = 1e-6
    eps_rho: float = 1e-3
    digits: int = 12
    format: str = "json"
    out: Path | None = None

    def params(self) -> dict[str, Any]:
        """The parameters that shape this command's report body."""
        per_command = {
            "gen-seq": ("depth", "seed"),
            "omega": ("depth", "seed", "theta_table"),
            "target": ("mu", "nu", "depth", "seed"),
            "sieve": ("input", "levels", "ladder"),
            "polar": ("a", "b"),
            "resonance": ("depth", "seed", "s_range"),
            "decay-check": ("series", "alpha", "beta", "grid", "eps_term", "eps_rho"),
        }[self.command]
        out: dict[str, Any] = {}
        for name in per_command:
            value = getattr(self, name)
            if name == "s_range":
                value = f"{value[0]}..{value[1]}"
            elif name == "ladder" and value is not None:
                value = [str(v) for v in value]
            out[name] = value
        out["digits"] = self.digits
        return out


def parse_s_range(text: str) -> tuple[int, int]:
    """Parse ``"LO..HI"`` (or a single ``"S"``) into an inclusive pair."""
    lo_text, sep, hi_text = text.partition("..")
    try:
        lo = int(lo_text)
        hi = int(hi_text) if sep else lo
    except ValueError as e:
        raise UsageError(f"--s-range expects LO..HI, got {text!r}") from e
    if lo > hi:
        raise UsageError(f"--s-range is empty: {text!r}")
    return lo, hi


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config", default=None, help="Path to YAML config (default: ./config.yaml)"
    )
    common.add_argument(
        "--log-level",
        type=str.upper,
        choices=LEVELS,
        default="WARNING",
        help="Logging level written to stderr",
    )
    common.add_argument(
        "--out", "-o", default=None, help="Write the report here instead of stdout"
    )
    common.add_argument(
        "--format", choices=["json", "csv"], default=None, help="Report format (default: json)"
    )
    common.add_argument(
        "--digits", type=int, default=None, help="Significant digits of decimal approximations"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    """Config-backed options default to ``None`` so we can tell whether the
    user supplied them; when omitted, the value falls back to config.yaml."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="lacuna",
        description="Certified constructions for the uniqueness theory of trigonometric series",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    def seq_options(p: argparse.ArgumentParser) -> None:
        p.add_argument("--depth", type=int, default=None, help="Prefix length K")
        p.add_argument("--seed", type=int, default=None, help="First term n_1")

    p = sub.add_parser("gen-seq", parents=[common], help="Generate a lacunary prefix")
    seq_options(p)

    p = sub.add_parser("omega", parents=[common], help="Certified enclosure of Omega")
    seq_options(p)
    p.add_argument(
        "--theta-table", action="store_true", help="Add the certified Theta decay table"
    )

    p = sub.add_parser("target", parents=[common], help="Place Omega in [(mu-1)/nu, mu/nu]")
    seq_options(p)
    p.add_argument("--mu", type=int, default=None, help="Which subdivision (1..2*nu)")
    p.add_argument("--nu", type=int, default=None, help="[0, 2] is split into 2*nu pieces")

    p = sub.add_parser("sieve", parents=[common], help="Deletion sieve over a CSV of sizes")
    p.add_argument("--input", "-i", required=True, help="CSV of rationals (p/q or decimal)")
    p.add_argument("--levels", type=int, default=None, help="Number of sieve passes")

    p = sub.add_parser("polar", parents=[common], help="Amplitude-phase form of a*sin + b*cos")
    p.add_argument("--a", type=float, required=True, help="Sine coefficient")
    p.add_argument("--b", type=float, required=True, help="Cosine coefficient")

    p = sub.add_parser("resonance", parents=[common], help="Resonance certificates at pi*Omega")
    seq_options(p)
    p.add_argument("--s-range", default=None, metavar="LO..HI", help="Indices s to certify")

    p = sub.add_parser("decay-check", parents=[common], help="Empirical coefficient-decay harness")
    p.add_argument("--series", required=True, help="CSV with header n,a,b")
    p.add_argument("--alpha", type=float, required=True, help="Left end of the interval")
    p.add_argument("--beta", type=float, required=True, help="Right end of the interval")
    p.add_argument("--grid", type=int, default=None, help="Number of grid points")
    p.add_argument("--eps-term", type=float, default=None, help="Term tolerance")
    p.add_argument("--eps-rho", type=float, default=None, help="Amplitude tolerance")

    return parser


def _pick(value, fallback):
    return fallback if value is None else value


def _typed(name: str, value: Any, kind: type) -> Any:
    """Coerce a config-sourced value; flags arrive typed from argparse."""
    if isinstance(value, bool) or (kind is int and isinstance(value, float)):
        raise UsageError(f"{name} must be {kind.__name__}, got {value!r}")
    try:
        return kind(value)
    except (TypeError, ValueError) as e:
        raise UsageError(f"{name} must be {kind.__name__}, got {value!r}") from e


def resolve_run_config(args: argparse.Namespace, cfg: AppConfig) -> RunConfig:
    """Merge flags over config and check every value before dispatch.

    Priority: CLI flag > config.yaml > built-in default.
    """
    run = RunConfig(command=args.command)
    run.depth = _typed("depth", _pick(getattr(args, "depth", None), cfg.sequence.depth), int)
    run.seed = _typed("seed", _pick(getattr(args, "seed", None), cfg.sequence.seed), int)
    run.mu = _typed("mu", _pick(getattr(args, "mu", None), cfg.target.mu), int)
    run.nu = _typed("nu", _pick(getattr(args, "nu", None), cfg.target.nu), int)
    run.theta_table = bool(getattr(args, "theta_table", False))
    if run.command == "resonance":
        s_range = _pick(getattr(args, "s_range", None), cfg.trig.s_range)
        run.s_range = parse_s_range(_typed("s_range", s_range, str))
    run.levels = _typed("levels", _pick(getattr(args, "levels", None), cfg.sieve.levels), int)
    run.input = getattr(args, "input", None)
    run.series = getattr(args, "series", None)
    run.a = getattr(args, "a", 0.0)
    run.b = getattr(args, "b", 0.0)
    run.alpha = getattr(args, "alpha", 0.0)
    run.beta = getattr(args, "beta", 0.0)
    run.grid = _typed("grid", _pick(getattr(args, "grid", None), cfg.trig.grid), int)
    run.eps_term = _typed(
        "eps_term", _pick(getattr(args, "eps_term", None), cfg.trig.eps_term), float
    )
    run.eps_rho = _typed("eps_rho", _pick(getattr(args, "eps_rho", None), cfg.trig.eps_rho), float)
    run.digits = _typed("digits", _pick(args.digits, cfg.report.digits), int)
    run.format = _typed("format", _pick(args.format, cfg.report.format), str)

    if cfg.sieve.ladder and run.command == "sieve":
        try:
            run.ladder = tuple(parse_rational(str(v)) for v in cfg.sieve.ladder)
        except (LacunaError, TypeError) as e:
            raise UsageError(f"config sieve.ladder: {e}") from e

    if args.out is not None:
        run.out = Path(args.out)
    elif cfg.report.output_dir:
        run.out = Path(cfg.report.output_dir) / f"{run.command}.{run.format}"

    _check(run)
    return run


def _check(run: RunConfig) -> None:
    if run.format not in ("json", "csv"):
        raise UsageError(f"unknown format {run.format!r}")
    if run.format == "csv" and run.command not in TABULAR:
        raise UsageError(f"{run.command} has no tabular report; use --format json")
    if run.format == "csv" and run.command == "omega" and not run.theta_table:
        raise UsageError("omega --format csv needs --theta-table")
    if run.digits < 1:
        raise UsageError("--digits must be >= 1")
    for name in ("a", "b", "alpha", "beta", "eps_term", "eps_rho"):
        if not math.isfinite(getattr(run, name)):
            raise UsageError(f"--{name.replace('_', '-')} must be a finite number")
    if run.command in ("gen-seq", "omega", "target", "resonance"):
        if run.depth < 1 or run.seed < 1:
            raise UsageError("--depth and --seed must be >= 1")
    if run.command == "target" and run.nu < 1:
        raise UsageError("--nu must be >= 1")
    if run.command == "sieve" and run.levels < 0:
        raise UsageError("--levels must be >= 0")
    if run.command == "decay-check":
        if not run.alpha < run.beta:
            raise UsageError("--alpha must be smaller than --beta")
        if run.grid < 1:
            raise UsageError("--grid must be >= 1")


def run_command(run: RunConfig) -> Report:
    """Execute one subcommand and build its report (raises LacunaError)."""
    digits = run.digits
    params = run.params()

    if run.command == "gen-seq":
        seq = default_generator(run.depth, run.seed)
        return Report(run.command, params, ser.sequence_body(seq))

    if run.command == "omega":
        seq = default_generator(run.depth, run.seed)
        odds, chain = approximants(seq)
        omega = omega_enclosure(seq)
        thetas = theta_table(seq) if run.theta_table else None
        table = [ser.theta_row(r, digits) for r in thetas] if thetas is not None else None
        body = ser.omega_body(seq, odds, chain, omega, thetas, digits)
        return Report(run.command, params, body, table, ser.THETA_COLUMNS)

    if run.command == "target":
        seq = default_generator(run.depth, run.seed)
        result = targeted_omega(seq, TargetSpec(run.mu, run.nu))
        return Report(run.command, params, ser.target_body(result, digits))

    if run.command == "sieve":
        values = sizes(read_sizes(run.input))
        ladder = Ladder.of(run.ladder) if run.ladder else Ladder.harmonic()
        report = sieve(values, ladder, run.levels)
        body = ser.sieve_body(report, len(values), digits)
        return Report(run.command, params, body, ser.sieve_rows(report), ser.SIEVE_COLUMNS)

    if run.command == "polar":
        return Report(run.command, params, ser.polar_body(run.a, run.b, to_polar(run.a, run.b)))

    if run.command == "resonance":
        seq = default_generator(run.depth, run.seed)
        omega = omega_enclosure(seq)
        lo, hi = run.s_range
        certs = [resonance_point(omega, seq, s) for s in range(lo, hi + 1)]
        table = [ser.resonance_row(c, digits) for c in certs]
        body = ser.resonance_body(certs, digits)
        return Report(run.command, params, body, table, ser.RESONANCE_COLUMNS)

    if run.command == "decay-check":
        series = read_series(run.series)
        report = decay_check(series, run.alpha, run.beta, run.grid, run.eps_term, run.eps_rho)
        rows = ser.decay_rows(report)
        return Report(run.command, params, ser.decay_body(report), rows, ser.DECAY_COLUMNS)

    raise UsageError(f"unknown subcommand {run.command!r}")


def _write_error(stream: IO[str], error: dict[str, Any]) -> None:
    stream.write(json.dumps({"error": error}, indent=2) + "\n")


def dispatch(run: RunConfig, stream: IO[str] | None = None) -> int:
    """Run ``run`` and write its report; returns the exit status."""
    stream = stream or sys.stdout
    logger.info("Running %s", run.command)
    try:
        report = run_command(run)
        exporter = exporter_for(run.format, run.out, stream)
        try:
            exporter.write(report)
        finally:
            exporter.close()
    except LacunaError as e:
        logger.error("%s: %s", e.code, e)
        _write_error(stream, e.to_dict())
        return 1
    except OSError as e:
        logger.error("I/O error: %s", e)
        _write_error(stream, {"code": "io-error", "message": str(e), "details": {}})
        return 1

    if run.out is not None:
        logger.info("Wrote %s report to %s", run.format, run.out)
    return 0


def main(argv: list[str] | None = None, stream: IO[str] | None = None) -> int:
    """Main application entry point."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    setup_logging(args.log_level)
    cfg = load_config(args.config)

    try:
        run = resolve_run_config(args, cfg)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"lacuna {args.command}: error: {e}", file=sys.stderr)
        return 2

    try:
        return dispatch(run, stream)
    except Exception as e:
        logger.exception("Unexpected error: %s", e)
        return 1


if __name__ == "__main__":
    sys.exit(main())
