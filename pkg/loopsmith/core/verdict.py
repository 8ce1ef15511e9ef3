"""Moufang identities, the statement of Moufang's theorem, and MP.

A loop has Moufang's Property (MP) when it is not Moufang and still every
ordered triple (a, b, c) with associator(a, b, c) = 1 generates a group.
Both the Moufang identities and the theorem statement are decided by
exhaustive scans over all ordered triples, see `loopsmith.core.scan`.
"""

from __future__ import annotations

import dataclasses
import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..errors import ConsistencyError, ErrorCode, TripleSystemError
from ..schemas import MPKind, MPVerdict, MPWitness, PropertyReport
from .loop import (
    BoolArray,
    IntArray,
    LoopTable,
    Triple,
    associating_mask,
    commutativity_witness,
    exponent_two_witness,
    first_true,
    inverses_profile,
    is_steiner,
)
from .scan import ScanOptions, scan_rows
from .subloops import ClosureCache

logger = logging.getLogger(__name__)

TheoremWitness = tuple[Triple, Triple]


class MoufangIdentity(str, Enum):
    """Selector for the three equivalent Moufang identities."""

    FIRST = "1"  # x(y(xz)) = ((xy)x)z
    SECOND = "2"  # y(x(zx)) = ((yx)z)x
    THIRD = "3"  # (xy)(zx) = x((yz)x)
    ALL = "all"


def _identity_holds(t: IntArray, x: int, which: MoufangIdentity) -> BoolArray:
    """mask[y, z] for one selected identity and fixed x (0-based)."""
    if which is MoufangIdentity.FIRST:
        lhs = t[x][t[:, t[x]]]
        rhs = t[t[t[x], x], :]
    elif which is MoufangIdentity.SECOND:
        lhs = t[:, t[x][t[:, x]]]
        rhs = t[:, x][t[t[:, x], :]]
    else:
        lhs = t[np.ix_(t[x], t[:, x])]
        rhs = t[x][t[:, x][t]]
    return lhs == rhs  # type: ignore[no-any-return]


class MoufangKernel:
    """Row kernel: triples (x, y, z) refuting the selected Moufang identity."""

    def __init__(self, loop: LoopTable, which: MoufangIdentity):
        self.loop = loop
        self.order = loop.order
        self.which = which

    def __call__(self, a0: int, exhaustive: bool) -> list[Triple]:
        t = self.loop.cells
        if self.which is MoufangIdentity.ALL:
            ok = (
                _identity_holds(t, a0, MoufangIdentity.FIRST)
                & _identity_holds(t, a0, MoufangIdentity.SECOND)
                & _identity_holds(t, a0, MoufangIdentity.THIRD)
            )
        else:
            ok = _identity_holds(t, a0, self.which)
        if exhaustive:
            return [(a0 + 1, int(y) + 1, int(z) + 1) for y, z in np.argwhere(~ok)]
        hit = first_true(~ok)
        return [] if hit is None else [(a0 + 1, hit[0] + 1, hit[1] + 1)]


class TheoremKernel:
    """Row kernel: associating triples whose generated subloop is not a group.

    Each worker process builds its own closure cache on first use.
    """

    def __init__(self, loop: LoopTable):
        self.loop = loop
        self.order = loop.order
        self._cache: ClosureCache | None = None

    def __getstate__(self) -> dict[str, object]:
        return {"loop": self.loop, "order": self.order, "_cache": None}

    def __call__(self, a0: int, exhaustive: bool) -> list[TheoremWitness]:
        if self._cache is None:
            self._cache = ClosureCache(self.loop)
        cache = self._cache
        bs, cs = np.nonzero(associating_mask(self.loop.cells, a0))
        hits: list[TheoremWitness] = []
        for b0, c0 in zip(bs.tolist(), cs.tolist()):
            failure = cache.failure(frozenset((a0, b0, c0)))
            if failure is None:
                continue
            p, q, r = failure
            hits.append(((a0 + 1, b0 + 1, c0 + 1), (p + 1, q + 1, r + 1)))
            if not exhaustive:
                break
        return hits


def is_moufang(
    loop: LoopTable,
    which: MoufangIdentity = MoufangIdentity.THIRD,
    options: ScanOptions | None = None,
) -> tuple[bool, Triple | None]:
    """Check a Moufang identity over all ordered triples.

    Args:
        loop: The loop to check
        which: Identity selector; THIRD is enough to classify
        options: Scan options (always run as early-exit)

    Returns:
        (holds, first refuting triple (x, y, z) or None)
    """
    options = dataclasses.replace(options or ScanOptions(), exhaustive=False)
    result = scan_rows(MoufangKernel(loop, which), options)
    return result.first is None, result.first


@dataclass(frozen=True)
class TheoremVerdict:
    """Whether the statement of Moufang's theorem holds in a loop.

    Attributes:
        holds: Every associating triple generates a group
        witness: The reported failure, when holds is False
        witnesses: Every failure, sorted, in exhaustive mode
        deterministic: False when a parallel scan picked the witness
    """

    holds: bool
    witness: MPWitness | None
    witnesses: list[MPWitness]
    deterministic: bool


def moufang_theorem_verdict(loop: LoopTable, options: ScanOptions | None = None) -> TheoremVerdict:
    """Scan every ordered triple (a, b, c), including repeats and identity
    arguments; for each one with trivial associator test whether the closure
    of {a, b, c} is associative."""
    result = scan_rows(TheoremKernel(loop), options)
    witnesses = [MPWitness(triple=t, refuting=r) for t, r in result.witnesses]
    return TheoremVerdict(
        holds=not witnesses,
        witness=witnesses[0] if witnesses else None,
        witnesses=witnesses,
        deterministic=result.deterministic,
    )


def mp_status(loop: LoopTable, options: ScanOptions | None = None) -> MPVerdict:
    """Classify a loop as MOUFANG, MP or FAILS.

    Raises:
        ConsistencyError: A Moufang loop violated the theorem statement
    """
    options = dataclasses.replace(options or ScanOptions(), exhaustive=False)
    moufang, moufang_witness = is_moufang(loop, MoufangIdentity.THIRD, options)
    theorem = moufang_theorem_verdict(loop, options)

    if moufang:
        if not theorem.holds:
            raise ConsistencyError(
                f"Moufang loop of order {loop.order} fails the theorem statement at "
                f"{theorem.witness}"
            )
        kind = MPKind.MOUFANG
    else:
        kind = MPKind.MP if theorem.holds else MPKind.FAILS
    logger.info("mp_status order=%d: %s", loop.order, kind.value)
    return MPVerdict(
        kind=kind,
        order=loop.order,
        witness=theorem.witness,
        deterministic=theorem.deterministic,
        moufang_witness=moufang_witness,
    )


def property_report(loop: LoopTable, options: ScanOptions | None = None) -> PropertyReport:
    """Evaluate every loop predicate, with a witness for each failure."""
    witnesses: dict[str, tuple[int, ...]] = {}
    commutative = commutativity_witness(loop)
    if commutative is not None:
        witnesses["is_commutative"] = commutative
    profile = inverses_profile(loop)
    if profile.witness is not None:
        witnesses["has_ip"] = profile.witness
    square = exponent_two_witness(loop)
    if square is not None:
        witnesses["exponent_two"] = (square,)
    moufang, moufang_witness = is_moufang(loop, MoufangIdentity.THIRD, options)
    if moufang_witness is not None:
        witnesses["is_moufang"] = moufang_witness
    return PropertyReport(
        order=loop.order,
        is_commutative=commutative is None,
        has_ip=profile.has_ip,
        exponent_two=square is None,
        is_steiner=profile.has_ip and square is None,
        is_moufang=moufang,
        witnesses=witnesses,
    )


def collinearity_violations(loop: LoopTable) -> list[Triple]:
    """Distinct non-identity ordered triples (x, y, z) with trivial
    associator and z != x*y.

    In a Steiner loop z = x*y says exactly that x, y, z form a block of the
    associated triple system.

    Raises:
        TripleSystemError: NOT_STEINER
    """
    if not is_steiner(loop):
        raise TripleSystemError(ErrorCode.NOT_STEINER, "collinearity needs a Steiner loop")
    t = loop.cells
    k = loop.order
    idx = np.arange(k)
    distinct = (idx[:, None] != idx[None, :]) & (idx[:, None] != 0) & (idx[None, :] != 0)
    violations: list[Triple] = []
    for x in range(1, k):
        candidates = associating_mask(t, x) & distinct
        candidates[x, :] = False
        candidates[:, x] = False
        candidates &= idx[None, :] != t[x][:, None]
        violations.extend((x + 1, int(y) + 1, int(z) + 1) for y, z in np.argwhere(candidates))
    return violations
