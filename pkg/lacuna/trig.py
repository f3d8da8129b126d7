"""Trigonometric terms, amplitude-phase form, and the resonance demonstrator.

A term ``a*sin(nx) + b*cos(nx)`` is rewritten as ``rho*cos(phi - nx)`` with
``rho = sqrt(a**2 + b**2)`` and ``phi`` in ``[0, 2*pi)``. If the terms of a
series tend to zero on an interval, the amplitudes ``rho_n`` must tend to zero
too. The resonance point ``x* = pi*Omega`` shows the mechanism: along the
lacunary frequencies ``n_s``, ``n_s*Omega`` sits within ``Theta_s`` of an odd
integer, so ``cos(n_s*x*)`` is pinned near -1 and unit amplitudes never fade.

Huge frequencies are never fed to ``cos`` directly: ``n_s*Omega`` is reduced
modulo 2 in exact rationals first (see :func:`lacuna.exact.cos_pi`).
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import SeriesError
from .exact import Enclosure, cos_pi, reduce_mod_two
from .omega import OmegaEnclosure, theta
from .sequence import LacunarySequence

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class CoefficientPair:
    n: int
    a: float  # sine coefficient
    b: float  # cosine coefficient

    def __post_init__(self):
        if self.n < 1:
            raise SeriesError(f"frequency must be >= 1, got {self.n}", code="bad-input", n=self.n)


@dataclass(frozen=True)
class PolarTerm:
    rho: float
    phi: float


def to_polar(a: float, b: float) -> PolarTerm:
    """``(rho, phi)`` with ``b = rho*cos(phi)``, ``a = rho*sin(phi)``, ``phi`` in [0, 2pi)."""
    rho = math.hypot(a, b)
    if rho == 0.0:
        return PolarTerm(0.0, 0.0)
    phi = math.atan2(a, b)
    if phi < 0.0:
        phi += TWO_PI
    if phi >= TWO_PI:  # -tiny + 2pi can round up to 2pi
        phi = 0.0
    return PolarTerm(rho, phi)


def from_polar(t: PolarTerm) -> tuple[float, float]:
    """Inverse of :func:`to_polar`, returning ``(a, b)``."""
    return t.rho * math.sin(t.phi), t.rho * math.cos(t.phi)


def term_value(p: CoefficientPair, x: float) -> float:
    return p.a * math.sin(p.n * x) + p.b * math.cos(p.n * x)


def polar_term_value(n: int, t: PolarTerm, x: float) -> float:
    return t.rho * math.cos(t.phi - n * x)


def _ordered(series: Iterable[CoefficientPair]) -> list[CoefficientPair]:
    """Series sorted by ascending frequency; duplicate frequencies are an error."""
    pairs = sorted(series, key=lambda p: p.n)
    for prev, cur in zip(pairs, pairs[1:], strict=False):
        if prev.n == cur.n:
            raise SeriesError(
                f"frequency {cur.n} appears more than once", code="duplicate-frequency", n=cur.n
            )
    return pairs


def partial_sum(series: Iterable[CoefficientPair], x: float) -> float:
    """Sum of the terms at ``x``, accumulated in ascending frequency."""
    total = 0.0
    for p in _ordered(series):
        total += term_value(p, x)
    return total


# ──────────────────────────── resonance ────────────────────────────


@dataclass(frozen=True)
class ResonanceCertificate:
    s: int
    n: int
    odd: int  # 2z + 1
    omega: Enclosure
    theta_bar: Fraction  # certified upper bound on Theta_s
    cos_bound: float  # certified bound on |cos(n_s*pi*Omega) + 1|
    cos_at_midpoint: float
    gap_at_midpoint: float  # |cos(n_s*pi*omega_mid) + 1|

    @property
    def x_star(self) -> float:
        return math.pi * float(self.omega.midpoint)

    @property
    def consistent(self) -> bool:
        return 0.0 <= self.gap_at_midpoint <= self.cos_bound


def resonance_point(
    omega: OmegaEnclosure, seq: LacunarySequence, s: int
) -> ResonanceCertificate:
    """Certify that ``cos(n_s * x*)`` is near -1 at ``x* = pi*Omega``.

    ``cos(n_s*pi*Omega) = cos((2z+1)*pi +- Theta*pi) = -cos(Theta*pi)``, so
    ``|cos(n_s*pi*Omega) + 1| = 1 - cos(pi*Theta) <= (pi*Theta_bar)**2 / 2``.
    """
    residual = theta(seq, s, omega)
    theta_bar = residual.theta_bounds.hi
    cos_bound = (math.pi * float(theta_bar)) ** 2 / 2.0

    arg = residual.n * omega.center
    # distance of arg from the odd integer, reduced exactly into [-1, 1)
    offset = reduce_mod_two(arg - 1)
    gap = 2.0 * math.sin(math.pi * float(offset) / 2.0) ** 2
    cert = ResonanceCertificate(
        s=s,
        n=residual.n,
        odd=residual.odd,
        omega=omega.enclosure,
        theta_bar=theta_bar,
        cos_bound=cos_bound,
        cos_at_midpoint=cos_pi(arg),
        gap_at_midpoint=gap,
    )
    logger.debug(
        "resonance s=%d n=%d: Theta<=%.3g, bound %.3g, midpoint gap %.3g",
        s,
        residual.n,
        float(theta_bar),
        cos_bound,
        gap,
    )
    return cert


def lacunary_resonant_series(
    seq: LacunarySequence, indices: Iterable[int]
) -> list[CoefficientPair]:
    """Unit-amplitude pure cosines at the frequencies ``n_s``."""
    return [CoefficientPair(seq.term(s), 0.0, 1.0) for s in indices]


# ──────────────────────────── decay harness ────────────────────────────


@dataclass(frozen=True)
class DecayRow:
    n: int
    rho: float
    grid_sup: float
    flagged: bool


@dataclass(frozen=True)
class DecayReport:
    alpha: float
    beta: float
    grid_points: int
    eps_term: float
    eps_rho: float
    rows: tuple[DecayRow, ...]

    @property
    def flags(self) -> list[int]:
        return [r.n for r in self.rows if r.flagged]


def anti_alias_floor(max_frequency: int, alpha: float, beta: float) -> int:
    """Fewest grid points giving about four samples per period of the fastest term."""
    return math.ceil(4 * max_frequency * (beta - alpha) / TWO_PI)


def midpoint_grid(alpha: float, beta: float, points: int) -> np.ndarray:
    """``points`` cell midpoints of the open interval ``(alpha, beta)``."""
    step = (beta - alpha) / points
    return alpha + (np.arange(points) + 0.5) * step


def decay_check(
    series: Sequence[CoefficientPair],
    alpha: float,
    beta: float,
    grid_points: int,
    eps_term: float = 1e-6,
    eps_rho: float = 1e-3,
) -> DecayReport:
    """Compare each amplitude ``rho_n`` with the grid supremum of ``|term_n|``.

    Flags every ``n`` whose amplitude exceeds ``eps_rho`` while the term stays
    under ``eps_term`` on the whole grid. At finite ``n`` a flag points at a
    coarse grid or a near-cancellation, not at a failure of the limit theorem.
    """
    if not alpha < beta:
        raise SeriesError(
            f"need alpha < beta, got ({alpha}, {beta})", code="bad-input", alpha=alpha, beta=beta
        )
    if grid_points < 1:
        raise SeriesError(
            f"grid needs at least one point, got {grid_points}",
            code="bad-input",
            grid_points=grid_points,
        )
    pairs = _ordered(series)
    if pairs:
        floor = anti_alias_floor(pairs[-1].n, alpha, beta)
        if grid_points < floor:
            raise SeriesError(
                f"{grid_points} grid points is below the anti-aliasing floor {floor}",
                code="grid-too-coarse",
                grid_points=grid_points,
                floor=floor,
            )
    grid = midpoint_grid(alpha, beta, grid_points)

    rows = []
    for p in pairs:
        t = to_polar(p.a, p.b)
        # polar form keeps |term| <= rho exactly
        values = t.rho * np.abs(np.cos(t.phi - p.n * grid))
        sup = float(values.max()) if values.size else 0.0
        rows.append(DecayRow(p.n, t.rho, sup, t.rho > eps_rho and sup < eps_term))

    report = DecayReport(alpha, beta, grid_points, eps_term, eps_rho, tuple(rows))
    if report.flags:
        logger.info("decay check flagged frequencies %s", report.flags)
    return report
