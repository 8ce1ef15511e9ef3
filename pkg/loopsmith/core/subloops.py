"""Subloop closure and associativity of subsets."""

from __future__ import annotations

import logging
from collections.abc import Iterable

import numpy as np

from ..schemas import SubloopSet
from .loop import IntArray, LoopTable, Pair, Triple, check_elements, first_true

logger = logging.getLogger(__name__)


def closure_indices(cells: IntArray, gens0: Iterable[int]) -> IntArray:
    """Multiplicative closure of 0-based generators plus the identity.

    Returns:
        Sorted 0-based member array
    """
    members = np.union1d(np.fromiter(gens0, dtype=np.intp), [0])
    while True:
        grown = np.union1d(members, cells[np.ix_(members, members)].ravel())
        if grown.size == members.size:
            return members
        members = grown


def nonassociative_triple(cells: IntArray, members: IntArray) -> tuple[int, int, int] | None:
    """First (0-based) triple of members with (pq)r != p(qr), in sorted order."""
    sub = cells[np.ix_(members, members)]
    left = cells[sub][:, :, members]
    right = cells[members][:, sub]
    hit = first_true(left != right)
    if hit is None:
        return None
    p, q, r = hit
    return int(members[p]), int(members[q]), int(members[r])


def generate_subloop(loop: LoopTable, gens: Iterable[int]) -> SubloopSet:
    """Return the subloop generated by `gens`.

    Args:
        loop: Parent loop
        gens: Nonempty collection of 1-based generators

    Returns:
        SubloopSet holding the closure of gens and the identity
    """
    generators = sorted(set(gens))
    if not generators:
        raise ValueError("at least one generator is required")
    check_elements(loop, *generators)
    members = closure_indices(loop.cells, (g - 1 for g in generators))
    # A finite multiplicatively closed subset of a loop is closed under both divisions
    block = np.ix_(members, members)
    assert np.isin(loop.ldiv[block], members).all() and np.isin(loop.rdiv[block], members).all()
    return SubloopSet(
        parent_order=loop.order,
        members=frozenset(int(m) + 1 for m in members),
        generators=generators,
    )


def associativity_witness(loop: LoopTable, subloop: SubloopSet) -> Triple | None:
    """Return the lexicographically smallest (p, q, r) in the subloop with
    (pq)r != p(qr), or None when the subloop is a group."""
    members = np.array(sorted(m - 1 for m in subloop.members), dtype=np.intp)
    hit = nonassociative_triple(loop.cells, members)
    if hit is None:
        return None
    return hit[0] + 1, hit[1] + 1, hit[2] + 1


class ClosureCache:
    """Memoises closures and their associativity for one loop.

    Keys are frozensets of 0-based generators; closures of equal generator
    sets are computed once, and so is the associativity test of each distinct
    closure.
    """

    def __init__(self, loop: LoopTable):
        self.loop = loop
        self._closures: dict[frozenset[int], frozenset[int]] = {}
        self._failures: dict[frozenset[int], tuple[int, int, int] | None] = {}

    def closure(self, gens0: frozenset[int]) -> frozenset[int]:
        found = self._closures.get(gens0)
        if found is None:
            found = frozenset(int(m) for m in closure_indices(self.loop.cells, gens0))
            self._closures[gens0] = found
        return found

    def failure(self, gens0: frozenset[int]) -> tuple[int, int, int] | None:
        """0-based non-associating triple inside the closure of gens0, or None."""
        members = self.closure(gens0)
        if members not in self._failures:
            ordered = np.array(sorted(members), dtype=np.intp)
            self._failures[members] = nonassociative_triple(self.loop.cells, ordered)
        return self._failures[members]

    def stats(self) -> dict[str, int]:
        return {"closures": len(self._closures), "distinct_subloops": len(self._failures)}


def diassociativity_witness(loop: LoopTable) -> Pair | None:
    """Return the first pair (a, b) whose generated subloop is not a group."""
    cache = ClosureCache(loop)
    for a0 in range(1, loop.order):
        for b0 in range(a0, loop.order):
            if cache.failure(frozenset((a0, b0))) is not None:
                return a0 + 1, b0 + 1
    logger.debug("diassociativity scan: %s", cache.stats())
    return None


def is_diassociative(loop: LoopTable) -> bool:
    """True iff every two elements generate a group."""
    return diassociativity_witness(loop) is None
