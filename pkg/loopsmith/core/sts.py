"""Steiner triple systems and their Steiner loops.

Points are labelled 1..v. The Steiner loop of an STS(v) has order v + 1:
element 1 is the adjoined identity and point p is element p + 1, so a block
{a, b, c} gives (a+1)*(b+1) = c+1.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from ..errors import ErrorCode, TripleSystemError
from .loop import LoopTable, is_steiner, validate_table

logger = logging.getLogger(__name__)

Block = tuple[int, int, int]


@dataclass(frozen=True)
class TripleSystem:
    """A validated Steiner triple system in canonical form.

    Attributes:
        points: Number of points v
        blocks: Ascending blocks in lexicographic order
    """

    points: int
    blocks: tuple[Block, ...]

    @property
    def expected_block_count(self) -> int:
        return self.points * (self.points - 1) // 6


def admissible_order(v: int) -> bool:
    """True iff an STS(v) exists: v >= 1 and v = 1 or 3 (mod 6)."""
    return v >= 1 and v % 6 in (1, 3)


def steiner_loop_order_admissible(m: int) -> bool:
    """True iff m = 2 or 4 (mod 6), the orders of Steiner loops of admissible STS."""
    return m >= 2 and m % 6 in (2, 4)


def _canonical_block(index: int, block: Iterable[int], v: int) -> Block:
    items = list(block)
    if len(items) != 3 or len(set(items)) != 3:
        raise TripleSystemError(
            ErrorCode.BAD_BLOCK, f"block {index} must have 3 distinct points: {items}", (index,)
        )
    for p in items:
        if isinstance(p, bool) or not isinstance(p, int | np.integer) or not 1 <= p <= v:
            raise TripleSystemError(
                ErrorCode.BAD_BLOCK, f"block {index} has a point outside 1..{v}: {p!r}", (index,)
            )
    a, b, c = sorted(int(p) for p in items)
    return a, b, c


def validate_sts(v: int, blocks: Iterable[Iterable[int]]) -> TripleSystem:
    """Validate a block list as an STS(v).

    Args:
        v: Number of points (>= 1)
        blocks: 3-element blocks of 1-based point labels

    Returns:
        TripleSystem with sorted blocks

    Raises:
        TripleSystemError: BAD_BLOCK, PAIR_DUPLICATED or PAIR_UNCOVERED (the
            lexicographically first uncovered pair)
    """
    if v < 1:
        raise TripleSystemError(ErrorCode.BAD_BLOCK, f"point count must be at least 1, got {v}")
    canonical = [_canonical_block(i, block, v) for i, block in enumerate(blocks, start=1)]

    cover = np.zeros((v + 1, v + 1), dtype=np.int8)
    for a, b, c in canonical:
        for x, y in ((a, b), (a, c), (b, c)):
            if cover[x, y]:
                raise TripleSystemError(
                    ErrorCode.PAIR_DUPLICATED, f"pair {{{x},{y}}} lies in two blocks", (x, y)
                )
            cover[x, y] = 1

    upper = np.triu(np.ones((v + 1, v + 1), dtype=bool), k=1)
    upper[0, :] = False
    missing = np.argwhere(upper & (cover == 0))
    if missing.size:
        x, y = (int(p) for p in missing[0])
        raise TripleSystemError(
            ErrorCode.PAIR_UNCOVERED, f"pair {{{x},{y}}} lies in no block", (x, y)
        )
    return TripleSystem(points=v, blocks=tuple(sorted(canonical)))


def point_degrees(sts: TripleSystem) -> tuple[int, ...]:
    """Number of blocks through each point, indexed by point - 1."""
    counts = np.zeros(sts.points, dtype=np.intp)
    for block in sts.blocks:
        for p in block:
            counts[p - 1] += 1
    return tuple(int(c) for c in counts)


def sts_to_loop(sts: TripleSystem) -> LoopTable:
    """Build the Steiner loop of order v + 1 of a triple system."""
    k = sts.points + 1
    cells = np.zeros((k, k), dtype=np.intp)
    cells[0, :] = np.arange(k)
    cells[:, 0] = np.arange(k)
    for a, b, c in sts.blocks:
        cells[a, b] = cells[b, a] = c
        cells[a, c] = cells[c, a] = b
        cells[b, c] = cells[c, b] = a
    return validate_table(cells + 1)


def loop_to_sts(loop: LoopTable) -> TripleSystem:
    """Recover the triple system of a Steiner loop.

    Raises:
        TripleSystemError: NOT_STEINER for non-Steiner loops and for the
            order-1 loop, which has no points
    """
    if loop.order < 2:
        raise TripleSystemError(ErrorCode.NOT_STEINER, "the trivial loop has no point set")
    if not is_steiner(loop):
        raise TripleSystemError(
            ErrorCode.NOT_STEINER, f"loop of order {loop.order} is not a Steiner loop"
        )
    t = loop.cells
    blocks: set[Block] = set()
    for a0 in range(1, loop.order):
        for b0 in range(a0 + 1, loop.order):
            c0 = int(t[a0, b0])
            x, y, z = sorted((a0, b0, c0))
            blocks.add((x, y, z))
    logger.debug("recovered %d blocks from a loop of order %d", len(blocks), loop.order)
    return validate_sts(loop.order - 1, sorted(blocks))
