"""Deletion sieve over finite prefixes of size sequences.

Given sizes ``rho_1, rho_2, ...`` and a strictly decreasing ladder
``Delta_1 > Delta_2 > ...`` (by default ``1/k``), pass ``k`` deletes every
remaining member strictly bigger than ``Delta_k``. On an infinite sequence
whose every subsequence dips below every size, no pass deletes infinitely many
members, so each pass has a last deleted member and everything after it is
below ``Delta_k``. A finite prefix cannot decide a limit: the report records
what each pass did and how far the prefix stays consistent with that picture.

All indices are 1-based, matching the subscript of the member they name.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import SieveError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SizeSequence:
    values: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.values)

    def at(self, i: int) -> Fraction:
        return self.values[i - 1]


def sizes(values: Iterable[Fraction | int]) -> SizeSequence:
    """Build a :class:`SizeSequence`, rejecting non-positive members."""
    out = tuple(Fraction(v) for v in values)
    for i, v in enumerate(out, 1):
        if v <= 0:
            raise SieveError(f"size at index {i} is {v}, not positive", code="bad-input", index=i)
    return SizeSequence(out)


@dataclass(frozen=True)
class Ladder:
    """Descending thresholds. ``steps=None`` is the unbounded ladder ``1/k``."""

    steps: tuple[Fraction, ...] | None = None

    @classmethod
    def harmonic(cls) -> Ladder:
        return cls()

    @classmethod
    def of(cls, steps: Iterable[Fraction | int]) -> Ladder:
        values = tuple(Fraction(s) for s in steps)
        if not values or values[-1] <= 0:
            raise SieveError("ladder steps must be positive", code="bad-ladder")
        for k in range(1, len(values)):
            if not values[k] < values[k - 1]:
                raise SieveError(
                    f"ladder is not strictly decreasing at step {k + 1}",
                    code="bad-ladder",
                    step=k + 1,
                )
        return cls(values)

    @property
    def available(self) -> int | None:
        return None if self.steps is None else len(self.steps)

    def delta(self, k: int) -> Fraction:
        if self.steps is None:
            return Fraction(1, k)
        return self.steps[k - 1]


@dataclass(frozen=True)
class SieveLevel:
    level: int
    delta: Fraction
    deleted: tuple[int, ...]
    survivors: int
    residual_max: Fraction | None  # None once nothing survives

    @property
    def last_deleted(self) -> int | None:
        return self.deleted[-1] if self.deleted else None


@dataclass(frozen=True)
class SieveReport:
    levels: tuple[SieveLevel, ...]

    @property
    def consistent_up_to(self) -> int:
        """Deepest level ``L`` such that every pass ``<= L`` left members behind.

        A pass that empties the prefix deleted a whole tail, which is the
        finite shadow of deleting infinitely many members.
        """
        depth = 0
        for row in self.levels:
            if row.survivors == 0:
                break
            depth = row.level
        return depth

    def surviving_values(self, seq: SizeSequence) -> list[Fraction]:
        gone = {i for row in self.levels for i in row.deleted}
        return [v for i, v in enumerate(seq.values, 1) if i not in gone]


def sieve(seq: SizeSequence, ladder: Ladder | None = None, levels: int = 10) -> SieveReport:
    ladder = ladder or Ladder.harmonic()
    if ladder.available is not None and levels > ladder.available:
        raise SieveError(
            f"requested {levels} levels but the ladder has {ladder.available}",
            code="levels-exceed-ladder",
            levels=levels,
            available=ladder.available,
        )
    if not seq.values:
        return SieveReport(())

    remaining = list(range(1, len(seq) + 1))
    rows = []
    for k in range(1, levels + 1):
        delta = ladder.delta(k)
        deleted = tuple(i for i in remaining if seq.at(i) > delta)
        if deleted:
            gone = set(deleted)
            remaining = [i for i in remaining if i not in gone]
        residual = max((seq.at(i) for i in remaining), default=None)
        logger.debug(
            "pass %d (delta=%s): deleted %d, %d left", k, delta, len(deleted), len(remaining)
        )
        rows.append(SieveLevel(k, delta, deleted, len(remaining), residual))
    return SieveReport(tuple(rows))


def eventually_below(seq: SizeSequence, delta: Fraction) -> int | None:
    """Smallest ``i`` with every member from ``i`` on below ``delta``.

    ``None`` when the last member is not below ``delta`` (or the prefix is empty).
    """
    _check_delta(delta)
    start = None
    for i in range(len(seq), 0, -1):
        if not seq.at(i) < delta:
            break
        start = i
    return start


def check_selector(seq: SizeSequence, selector: Sequence[int]) -> None:
    for pos, i in enumerate(selector):
        if not 1 <= i <= len(seq):
            raise SieveError(
                f"selector index {i} outside 1..{len(seq)}",
                code="selector-out-of-range",
                index=i,
                length=len(seq),
            )
        if pos and i <= selector[pos - 1]:
            raise SieveError(
                "selector indices must be strictly increasing", code="bad-selector", index=i
            )


def select(seq: SizeSequence, selector: Sequence[int]) -> SizeSequence:
    check_selector(seq, selector)
    return SizeSequence(tuple(seq.at(i) for i in selector))


def compose_selectors(outer: Sequence[int], inner: Sequence[int]) -> list[int]:
    """Indices into the base sequence picked by ``inner`` applied to ``outer``."""
    for i in inner:
        if not 1 <= i <= len(outer):
            raise SieveError(
                f"inner selector index {i} outside 1..{len(outer)}",
                code="selector-out-of-range",
                index=i,
                length=len(outer),
            )
    return [outer[i - 1] for i in inner]


def subsequence_min_check(
    seq: SizeSequence, selector: Sequence[int], delta: Fraction
) -> tuple[bool, int | None]:
    """Does the selected subsequence have a member below ``delta``?

    Returns ``(True, index)`` with the first witness, else ``(False, None)``.
    """
    _check_delta(delta)
    check_selector(seq, selector)
    for i in selector:
        if seq.at(i) < delta:
            return True, i
    return False, None


def null_subsequence(
    seq: SizeSequence,
    selector: Sequence[int] | None = None,
    ladder: Ladder | None = None,
    levels: int = 10,
) -> list[int]:
    """Extract indices ``i_1 < i_2 < ...`` from the selected subsequence with
    ``rho_(i_k) < Delta_k``, one per ladder level, as far as the prefix allows."""
    ladder = ladder or Ladder.harmonic()
    picks = list(selector) if selector is not None else list(range(1, len(seq) + 1))
    check_selector(seq, picks)
    limit = levels if ladder.available is None else min(levels, ladder.available)
    found: list[int] = []
    for i in picks:
        if len(found) == limit:
            break
        if seq.at(i) < ladder.delta(len(found) + 1):
            found.append(i)
    return found


def _check_delta(delta: Fraction) -> None:
    if not delta > 0:
        raise SieveError(f"delta must be a positive size, got {delta}", code="bad-delta")
