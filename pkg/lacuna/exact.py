"""Exact arithmetic substrate: rationals in lowest terms and rational enclosures.

Rationals are :class:`fractions.Fraction` values, which already keep a positive
denominator and lowest terms, so exact equality is representational equality.
:class:`Enclosure` is a closed interval ``[lo, hi]`` with rational endpoints
that certifies where a constructed real lies. No floating point is used here
except in :func:`cos_pi`, and only after exact argument reduction.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ArithmeticDomainError, InputFormatError

logger = logging.getLogger(__name__)

Rational = Fraction

ZERO = Fraction(0)


def normalize_rational(p: int, q: int) -> Fraction:
    """Return ``p/q`` in lowest terms with a positive denominator."""
    if q == 0:
        raise ArithmeticDomainError(
            f"cannot form {p}/{q}", code="zero-denominator", num=p, den=q
        )
    return Fraction(p, q)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, an integer, or a decimal string (exponents allowed)."""
    cleaned = text.strip()
    if not cleaned:
        raise InputFormatError("empty rational literal", text=text)
    if "/" in cleaned:
        num_text, _, den_text = cleaned.partition("/")
        try:
            num, den = int(num_text), int(den_text)
        except ValueError as e:
            raise InputFormatError(f"not a rational: {text!r}", text=text) from e
        return normalize_rational(num, den)
    try:
        return Fraction(cleaned)
    except ValueError as e:
        raise InputFormatError(f"not a rational: {text!r}", text=text) from e


@dataclass(frozen=True)
class Enclosure:
    """Closed rational interval ``[lo, hi]`` with ``lo <= hi``.

    Build through :func:`make_enclosure` (or :func:`around`) so the ordering
    invariant is checked.
    """

    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, r: Fraction) -> bool:
        return self.lo <= r <= self.hi

    def is_subset_of(self, other: Enclosure) -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def shift(self, r: Fraction) -> Enclosure:
        return Enclosure(self.lo + r, self.hi + r)

    def scale(self, k: int | Fraction) -> Enclosure:
        a, b = self.lo * k, self.hi * k
        return Enclosure(min(a, b), max(a, b))

    def abs(self) -> Enclosure:
        """Exact image of the interval under ``|x|``."""
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return Enclosure(-self.hi, -self.lo)
        return Enclosure(ZERO, max(-self.lo, self.hi))

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def make_enclosure(lo: Fraction, hi: Fraction) -> Enclosure:
    """Return ``[lo, hi]``; raises ``inverted-enclosure`` when ``lo > hi``."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ArithmeticDomainError(
            f"enclosure lower end {lo} exceeds upper end {hi}",
            code="inverted-enclosure",
            lo=lo,
            hi=hi,
        )
    return Enclosure(lo, hi)


def around(center: Fraction, radius: Fraction) -> Enclosure:
    """The enclosure ``[center - radius, center + radius]``."""
    return make_enclosure(center - radius, center + radius)


def enclosure_width(e: Enclosure) -> Fraction:
    return e.hi - e.lo


def reduce_mod_two(r: Fraction) -> Fraction:
    """Exact representative of ``r`` modulo 2 in ``[-1, 1)``."""
    return r - 2 * math.floor((r + 1) / 2)


def cos_pi(r: Fraction) -> float:
    """``cos(pi * r)`` with the argument reduced exactly before rounding.

    Only the reduced value in ``[-1, 1)`` ever reaches floating point, so huge
    numerators (``r = n_s * omega`` with ``n_s`` around 10**11) lose nothing.
    """
    return math.cos(math.pi * float(reduce_mod_two(Fraction(r))))
