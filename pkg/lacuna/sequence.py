"""Finite prefixes of super-lacunary integer sequences.

A prefix ``n_1 .. n_K`` is valid when ``n_1 >= 1`` and ``n_k > 2**k * n_(k-1)``
for every ``k >= 2`` (1-based ``k``). The first term has no predecessor, so the
growth law starts at ``k = 2``.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import SequenceError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LacunarySequence:
    terms: tuple[int, ...]

    @property
    def depth(self) -> int:
        return len(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def term(self, k: int) -> int:
        """1-based access: ``term(1) == n_1``."""
        if not 1 <= k <= len(self.terms):
            raise IndexError(f"term index {k} outside 1..{len(self.terms)}")
        return self.terms[k - 1]

    def prefix(self, k: int) -> LacunarySequence:
        if not 1 <= k <= len(self.terms):
            raise IndexError(f"prefix length {k} outside 1..{len(self.terms)}")
        return LacunarySequence(self.terms[:k])

    def tail_majorant(self, k: int | None = None) -> Fraction:
        """``1 / (2**k * n_k)``, a strict bound on ``sum_{j>k} 1/n_j`` for any
        valid extension (the growth law makes the tail at most geometric with
        ratio 1/2 starting below ``1/n_(k+1) < 1/(2**(k+1) n_k)``)."""
        k = len(self.terms) if k is None else k
        return Fraction(1, 2**k * self.term(k))


def validate(terms: Iterable[int]) -> LacunarySequence:
    """Check the growth law and return the validated sequence."""
    values = [int(t) for t in terms]
    if not values:
        raise SequenceError("a lacunary prefix needs at least one term", code="empty-sequence")
    if values[0] < 1:
        raise SequenceError(
            f"n_1 = {values[0]} is not a positive integer",
            code="non-positive-term",
            k=1,
            value=values[0],
        )
    for k in range(2, len(values) + 1):
        prev, cur = values[k - 2], values[k - 1]
        bound = 2**k * prev
        if not cur > bound:
            raise SequenceError(
                f"growth law fails at k={k}: n_{k} = {cur} is not > 2^{k} * n_{k - 1} = {bound}",
                code="growth-violation",
                k=k,
                comparison=f"{cur} > {bound}",
                lhs=cur,
                rhs=bound,
            )
    return LacunarySequence(tuple(values))


def default_generator(depth: int, seed: int = 3) -> LacunarySequence:
    """``n_1 = seed`` and ``n_k = 2**k * n_(k-1) + 1``, the tightest integer
    witness of the growth law."""
    if depth < 1 or seed < 1:
        raise ValueError(f"depth and seed must be >= 1 (got depth={depth}, seed={seed})")
    terms = [seed]
    for k in range(2, depth + 1):
        terms.append(2**k * terms[-1] + 1)
    logger.debug("generated depth-%d sequence from seed %d", depth, seed)
    return validate(terms)


def extend(seq: LacunarySequence, extra: Sequence[int]) -> LacunarySequence:
    """Append ``extra`` to ``seq``, re-checking the growth law at the new indices."""
    return validate([*seq.terms, *extra])
