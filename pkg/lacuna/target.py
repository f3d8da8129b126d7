"""Steering Omega into a prescribed subinterval of [0, 2].

Split [0, 2] into ``2*nu`` equal pieces and aim at the ``mu``-th one,
``[(mu-1)/nu, mu/nu]``. The chain starts at the first member ``nu_1 > 6*nu``
with an odd ``o_1`` whose ratio ``o_1/nu_1`` lands in the middle third of the
target, then continues over the consecutive members after ``nu_1`` with the
same odd recursion as :mod:`lacuna.omega`. The drift from ``xi_1`` is below the
tail majorant at ``nu_1``, which is smaller than the middle-third margin
``1/(3*nu)``, so the final enclosure sits inside the target.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DepthError, TargetError
from .exact import Enclosure, around, make_enclosure
from .omega import ThetaResidual, select_next_odd
from .sequence import LacunarySequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TargetSpec:
    mu: int
    nu: int

    def check(self) -> None:
        if self.nu < 1 or not 1 <= self.mu <= 2 * self.nu:
            raise TargetError(
                f"need nu >= 1 and 1 <= mu <= 2*nu, got mu={self.mu}, nu={self.nu}",
                code="bad-target",
                mu=self.mu,
                nu=self.nu,
            )


@dataclass(frozen=True)
class TargetedOmega:
    spec: TargetSpec
    enclosure: Enclosure
    nu_index: int  # 1-based position of nu_1 in the prefix
    nu_chain: tuple[int, ...]
    odd_chain: tuple[int, ...]
    xi_chain: tuple[Fraction, ...]

    @property
    def target(self) -> Enclosure:
        return target_interval(self.spec)

    @property
    def contained(self) -> bool:
        return self.enclosure.is_subset_of(self.target)

    @property
    def drift(self) -> Fraction:
        """Certified bound on ``|Omega - xi_1|``."""
        first = self.xi_chain[0]
        return max(abs(self.enclosure.lo - first), abs(self.enclosure.hi - first))


def target_interval(spec: TargetSpec) -> Enclosure:
    spec.check()
    return make_enclosure(Fraction(spec.mu - 1, spec.nu), Fraction(spec.mu, spec.nu))


def middle_third(spec: TargetSpec) -> Enclosure:
    spec.check()
    return make_enclosure(
        Fraction(3 * spec.mu - 2, 3 * spec.nu), Fraction(3 * spec.mu - 1, 3 * spec.nu)
    )


def find_nu1(seq: LacunarySequence, nu: int) -> tuple[int, int]:
    """First member strictly greater than ``6*nu`` and its 1-based index."""
    for index, n in enumerate(seq.terms, 1):
        if n > 6 * nu:
            return index, n
    raise TargetError(
        f"no member of the prefix exceeds 6*nu = {6 * nu}",
        code="prefix-too-short",
        nu=nu,
        largest=seq.terms[-1],
    )


def base_odd_in_third(nu1: int, spec: TargetSpec) -> int:
    """Smallest odd ``o`` with ``o/nu1`` in the middle third."""
    third = middle_third(spec)
    candidate = math.ceil(third.lo * nu1)
    if candidate % 2 == 0:
        candidate += 1
    if not third.contains(Fraction(candidate, nu1)):
        raise TargetError(
            f"no odd multiple of 1/{nu1} lies in {third}",
            code="no-odd-in-third",
            nu1=nu1,
            mu=spec.mu,
            nu=spec.nu,
        )
    return candidate


def targeted_omega(seq: LacunarySequence, spec: TargetSpec) -> TargetedOmega:
    spec.check()
    index, nu1 = find_nu1(seq, spec.nu)
    nus = seq.terms[index - 1 :]
    odds = [base_odd_in_third(nu1, spec)]
    for prev_nu, nu_k in zip(nus, nus[1:], strict=False):
        odds.append(select_next_odd(odds[-1], prev_nu, nu_k))
    xis = tuple(Fraction(o, v) for o, v in zip(odds, nus, strict=True))

    # the nu-chain runs to the end of the prefix, so the prefix's own tail
    # majorant bounds everything past the last xi
    enclosure = around(xis[-1], seq.tail_majorant())
    result = TargetedOmega(spec, enclosure, index, tuple(nus), tuple(odds), xis)
    logger.debug(
        "target mu=%d nu=%d: nu_1=%d (index %d), xi_1=%s, enclosure %s",
        spec.mu,
        spec.nu,
        nu1,
        index,
        xis[0],
        enclosure,
    )
    if not result.contained:
        raise DepthError(
            f"enclosure {enclosure} not inside target {result.target}",
            mu=spec.mu,
            nu=spec.nu,
            depth=seq.depth,
        )
    return result


def targeted_residuals(result: TargetedOmega) -> list[ThetaResidual]:
    """Theta residuals along the nu-subsequence.

    Row ``k`` covers ``nu_k``; its ``s`` is the 1-based index ``J`` of ``nu_k``
    in the prefix, so ``row.passes`` checks ``Theta < 2**-J``. Only positions
    with two further members are certified.
    """
    rows = []
    for k in range(len(result.nu_chain) - 2):
        nu_k, odd = result.nu_chain[k], result.odd_chain[k]
        bounds = result.enclosure.scale(nu_k).shift(Fraction(-odd)).abs()
        rows.append(
            ThetaResidual(s=result.nu_index + k, n=nu_k, z=(odd - 1) // 2, theta_bounds=bounds)
        )
    return rows
