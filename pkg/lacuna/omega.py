"""Construction of a real Omega resonant with a super-lacunary sequence.

From a prefix ``n_1 .. n_K`` we pick odd integers ``o_1 .. o_(K-1)``,

* ``|o_1 - n_2/n_1| <= 1``
* ``|o_k - o_(k-1) * n_(k+1)/n_k| <= 1`` for ``k >= 2``

and the rationals ``q_1 = 1/n_1``, ``q_k = o_(k-1)/n_k``. Consecutive
approximants differ by at most ``1/n_k`` and the tail of the growth law is
majorized by ``1/(2**K n_K)``, which gives a certified enclosure of
``Omega = lim q_k`` and of the residuals ``Theta_s = |n_s Omega - o_(s-1)|``.

The base rule is the recursion with ``o_0 = 1``, so one selector covers both.
Ties (target an even integer, two odds at distance exactly 1) go to the
smaller odd.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DepthError
from .exact import Enclosure, around
from .sequence import LacunarySequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OddChain:
    """``odds[i]`` (0-based) pairs with ``n_(i+2)``: ``q_(i+2) = odds[i] / n_(i+2)``."""

    odds: tuple[int, ...]


@dataclass(frozen=True)
class ApproximantChain:
    q: tuple[Fraction, ...]

    def at(self, k: int) -> Fraction:
        """1-based ``q_k``."""
        return self.q[k - 1]


@dataclass(frozen=True)
class OmegaEnclosure:
    enclosure: Enclosure
    depth: int
    center: Fraction
    radius: Fraction


@dataclass(frozen=True)
class ThetaResidual:
    s: int
    n: int
    z: int
    theta_bounds: Enclosure

    @property
    def odd(self) -> int:
        return 2 * self.z + 1

    @property
    def bound(self) -> Fraction:
        """The decay bound ``2**-s`` the residual must stay under."""
        return Fraction(1, 2**self.s)

    @property
    def passes(self) -> bool:
        return self.theta_bounds.hi < self.bound


def nearest_odd(target: Fraction) -> int:
    """Smallest odd integer within distance 1 of ``target`` (exact).

    ``[target - 1, target + 1]`` has length 2, so it always holds an odd.
    """
    candidate = math.ceil(target - 1)
    if candidate % 2 == 0:
        candidate += 1
    return candidate


def select_base_odd(n1: int, n2: int) -> int:
    return nearest_odd(Fraction(n2, n1))


def select_next_odd(prev: int, nk: int, nk1: int) -> int:
    return nearest_odd(Fraction(prev * nk1, nk))


def approximants(seq: LacunarySequence) -> tuple[OddChain, ApproximantChain]:
    terms = seq.terms
    odds: list[int] = []
    q = [Fraction(1, terms[0])]
    for k in range(1, len(terms)):
        if odds:
            odd = select_next_odd(odds[-1], terms[k - 1], terms[k])
        else:
            odd = select_base_odd(terms[0], terms[1])
        logger.debug("k=%d: selected odd %d for n=%d", k + 1, odd, terms[k])
        odds.append(odd)
        q.append(Fraction(odd, terms[k]))
    return OddChain(tuple(odds)), ApproximantChain(tuple(q))


def verify_odd_chain(seq: LacunarySequence, chain: OddChain) -> list[int]:
    """Re-check every defining inequality of ``chain``.

    Returns the 1-based ``k`` of each odd that fails (empty when valid);
    ``k`` names the odd ``2m_k + 1`` paired with ``n_(k+1)``.
    """
    terms = seq.terms
    failures = []
    prev = 1
    for i, odd in enumerate(chain.odds):
        k = i + 1
        target = Fraction(prev * terms[k], terms[k - 1])
        if odd <= 0 or odd % 2 == 0 or abs(odd - target) > 1:
            failures.append(k)
        prev = odd
    return failures


def omega_enclosure(seq: LacunarySequence) -> OmegaEnclosure:
    """Certified enclosure ``q_K +- 1/(2**K n_K)`` of Omega.

    The enclosure holds for every valid extension of the prefix, not just for
    the generated one.
    """
    if seq.depth < 2:
        raise DepthError(
            f"an enclosure needs depth >= 2, got {seq.depth}", depth=seq.depth
        )
    _, chain = approximants(seq)
    center = chain.q[-1]
    radius = seq.tail_majorant()
    return OmegaEnclosure(around(center, radius), seq.depth, center, radius)


def certified_range(depth: int) -> range:
    """The ``s`` for which a depth-``depth`` prefix certifies ``Theta_s < 2**-s``."""
    return range(2, depth - 1)


def theta(seq: LacunarySequence, s: int, omega: OmegaEnclosure | None = None) -> ThetaResidual:
    """Certified bounds on ``Theta_(n_s) = |n_s Omega - (2z+1)|``.

    ``omega`` defaults to the enclosure of ``seq`` itself; a precomputed one
    may be passed, and then ``s`` is checked against its depth.
    """
    depth = seq.depth if omega is None else omega.depth
    if s not in certified_range(depth) or s > seq.depth:
        raise DepthError(
            f"s={s} outside the certified range 2..{depth - 2} for depth {depth}",
            code="insufficient-depth-for-s",
            s=s,
            depth=depth,
        )
    odd_chain, _ = approximants(seq.prefix(s))
    if omega is None:
        omega = omega_enclosure(seq)
    n_s = seq.term(s)
    odd = odd_chain.odds[s - 2]
    bounds = omega.enclosure.scale(n_s).shift(Fraction(-odd)).abs()
    return ThetaResidual(s=s, n=n_s, z=(odd - 1) // 2, theta_bounds=bounds)


def theta_table(seq: LacunarySequence) -> list[ThetaResidual]:
    if seq.depth < 4:
        return []
    omega = omega_enclosure(seq)
    rows = [theta(seq, s, omega) for s in certified_range(seq.depth)]
    failed = [r.s for r in rows if not r.passes]
    if failed:
        logger.warning("Theta bound not certified for s=%s", failed)
    return rows
