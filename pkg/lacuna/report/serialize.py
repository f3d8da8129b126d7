"""Turn lacuna results into plain JSON-ready dicts and flat CSV rows.

Rationals serialize as ``{"num", "den", "approx"}`` with the integers written
as decimal strings (they outgrow JSON numbers quickly) and ``approx`` a
correctly rounded decimal with a fixed count of significant digits. Nothing
here reads a clock, so equal inputs give equal documents.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Any

from ..errors import InputFormatError
from ..exact import Enclosure
from ..omega import ApproximantChain, OddChain, OmegaEnclosure, ThetaResidual
from ..sequence import LacunarySequence
from ..sieve import SieveReport
from ..target import TargetedOmega, middle_third
from ..trig import DecayReport, PolarTerm, ResonanceCertificate

TOOL_NAME = "lacuna"

THETA_COLUMNS = ("s", "n", "odd", "theta_hi", "bound", "pass")
SIEVE_COLUMNS = ("level", "delta", "deleted", "last_deleted", "survivors", "residual_max")
RESONANCE_COLUMNS = (
    "s",
    "n",
    "odd",
    "theta_hi",
    "cos_bound",
    "cos_at_midpoint",
    "gap_at_midpoint",
    "consistent",
)
DECAY_COLUMNS = ("n", "rho", "grid_sup", "flagged")


@dataclass
class Report:
    """One subcommand's output: run metadata plus a body and optional table."""

    command: str
    params: dict[str, Any]
    body: dict[str, Any]
    table: list[dict[str, Any]] | None = None
    columns: tuple[str, ...] | None = None

    def document(self) -> dict[str, Any]:
        from .. import __version__

        header = {
            "tool": TOOL_NAME,
            "version": __version__,
            "command": self.command,
            "params": self.params,
        }
        return {"header": header, "body": self.body}


def decimal_approx(r: Fraction, digits: int) -> str:
    """``r`` rounded half-even to ``digits`` significant digits, plain notation."""
    if digits < 1:
        raise ValueError(f"digits must be >= 1, got {digits}")
    if r == 0:
        return "0" if digits == 1 else "0." + "0" * (digits - 1)
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        value = Decimal(r.numerator) / Decimal(r.denominator)
        value = value.quantize(Decimal(1).scaleb(value.adjusted() - digits + 1))
    return format(value, "f")


def serialize_rational(r: Fraction, digits: int = 12) -> dict[str, str]:
    r = Fraction(r)
    return {
        "num": str(r.numerator),
        "den": str(r.denominator),
        "approx": decimal_approx(r, digits),
    }


def parse_serialized_rational(obj: dict[str, Any]) -> Fraction:
    """Inverse of :func:`serialize_rational` (``approx`` is ignored)."""
    try:
        return Fraction(int(obj["num"]), int(obj["den"]))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise InputFormatError(f"not a serialized rational: {obj!r}") from e


def serialize_enclosure(e: Enclosure, digits: int = 12) -> dict[str, Any]:
    return {
        "lo": serialize_rational(e.lo, digits),
        "hi": serialize_rational(e.hi, digits),
        "width": serialize_rational(e.width, digits),
    }


def sequence_body(seq: LacunarySequence) -> dict[str, Any]:
    return {"depth": seq.depth, "terms": [str(n) for n in seq.terms]}


def theta_row(row: ThetaResidual, digits: int = 12) -> dict[str, Any]:
    return {
        "s": row.s,
        "n": str(row.n),
        "odd": str(row.odd),
        "theta_hi": decimal_approx(row.theta_bounds.hi, digits),
        "bound": decimal_approx(row.bound, digits),
        "pass": row.passes,
    }


def omega_body(
    seq: LacunarySequence,
    odds: OddChain,
    chain: ApproximantChain,
    omega: OmegaEnclosure,
    thetas: list[ThetaResidual] | None,
    digits: int = 12,
) -> dict[str, Any]:
    body: dict[str, Any] = {
        "sequence": [str(n) for n in seq.terms],
        "odd_chain": [str(o) for o in odds.odds],
        "q_chain": [serialize_rational(q, digits) for q in chain.q],
        "enclosure": serialize_enclosure(omega.enclosure, digits),
        "center": serialize_rational(omega.center, digits),
        "radius": serialize_rational(omega.radius, digits),
    }
    if thetas is not None:
        body["theta_table"] = [
            {**theta_row(r, digits), "theta": serialize_enclosure(r.theta_bounds, digits)}
            for r in thetas
        ]
    return body


def target_body(result: TargetedOmega, digits: int = 12) -> dict[str, Any]:
    return {
        "spec": {"mu": result.spec.mu, "nu": result.spec.nu},
        "target": serialize_enclosure(result.target, digits),
        "middle_third": serialize_enclosure(middle_third(result.spec), digits),
        "nu_1": {"index": result.nu_index, "value": str(result.nu_chain[0])},
        "nu_chain": [str(v) for v in result.nu_chain],
        "odd_chain": [str(o) for o in result.odd_chain],
        "xi_chain": [serialize_rational(x, digits) for x in result.xi_chain],
        "enclosure": serialize_enclosure(result.enclosure, digits),
        "drift": serialize_rational(result.drift, digits),
        "contained": result.contained,
    }


def sieve_rows(report: SieveReport) -> list[dict[str, Any]]:
    return [
        {
            "level": row.level,
            "delta": str(row.delta),
            "deleted": " ".join(str(i) for i in row.deleted),
            "last_deleted": row.last_deleted if row.last_deleted is not None else "",
            "survivors": row.survivors,
            "residual_max": "" if row.residual_max is None else str(row.residual_max),
        }
        for row in report.levels
    ]


def sieve_body(report: SieveReport, length: int, digits: int = 12) -> dict[str, Any]:
    return {
        "length": length,
        "levels": [
            {
                "level": row.level,
                "delta": serialize_rational(row.delta, digits),
                "deleted": list(row.deleted),
                "last_deleted": row.last_deleted,
                "survivors": row.survivors,
                "residual_max": None
                if row.residual_max is None
                else serialize_rational(row.residual_max, digits),
            }
            for row in report.levels
        ],
        "consistent_up_to": report.consistent_up_to,
    }


def polar_body(a: float, b: float, t: PolarTerm) -> dict[str, Any]:
    return {"a": a, "b": b, "rho": t.rho, "phi": t.phi}


def resonance_row(cert: ResonanceCertificate, digits: int = 12) -> dict[str, Any]:
    return {
        "s": cert.s,
        "n": str(cert.n),
        "odd": str(cert.odd),
        "theta_hi": decimal_approx(cert.theta_bar, digits),
        "cos_bound": cert.cos_bound,
        "cos_at_midpoint": cert.cos_at_midpoint,
        "gap_at_midpoint": cert.gap_at_midpoint,
        "consistent": cert.consistent,
    }


def resonance_body(certs: list[ResonanceCertificate], digits: int = 12) -> dict[str, Any]:
    body: dict[str, Any] = {"rows": [resonance_row(c, digits) for c in certs]}
    if certs:
        body["omega"] = serialize_enclosure(certs[0].omega, digits)
        body["x_star"] = certs[0].x_star
    return body


def decay_rows(report: DecayReport) -> list[dict[str, Any]]:
    return [
        {"n": r.n, "rho": r.rho, "grid_sup": r.grid_sup, "flagged": r.flagged}
        for r in report.rows
    ]


def decay_body(report: DecayReport) -> dict[str, Any]:
    return {
        "alpha": report.alpha,
        "beta": report.beta,
        "grid_points": report.grid_points,
        "eps_term": report.eps_term,
        "eps_rho": report.eps_rho,
        "rows": decay_rows(report),
        "flags": report.flags,
    }
