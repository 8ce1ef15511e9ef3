"""The Bose construction of Steiner triple systems and Steiner loops.

For odd n the points are Z_n x Z_3. The blocks are the level triples
{(x,0),(x,1),(x,2)} and the midpoint triples {(x,i),(y,i),((x+y)/2,i+1)};
adjoining an identity gives a commutative Steiner loop of order 3n + 1.

Element encoding (1-based, the loop table convention): the identity is 1
and (x, i) is 2 + i*n + x. STS points are the encoded index minus one.
"""

from __future__ import annotations

import logging
import math
from enum import Enum
from typing import NamedTuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..errors import ConsistencyError, ConstructionError, ElementError, ErrorCode
from .loop import LoopTable, validate_table
from .sts import Block, TripleSystem, validate_sts

logger = logging.getLogger(__name__)


class BoseParams(BaseModel):
    """Parameters of the Bose construction.

    Attributes:
        n: Odd modulus, at least 3 (n = 2t + 1)
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=3, description="Odd modulus of Z_n")

    @field_validator("n")
    @classmethod
    def _odd(cls, value: int) -> int:
        if value % 2 == 0:
            raise ValueError(f"n must be odd, got {value}")
        return value

    @property
    def t(self) -> int:
        return (self.n - 1) // 2

    @property
    def inv2(self) -> int:
        """The inverse of 2 in Z_n."""
        return pow(2, -1, self.n)

    @property
    def loop_order(self) -> int:
        return 3 * self.n + 1


class BoseIdentity(Enum):
    IDENTITY = "1"


IDENTITY = BoseIdentity.IDENTITY


class BosePoint(NamedTuple):
    """The element (x, i) of Z_n x Z_3."""

    x: int
    i: int


BoseElement = BosePoint | BoseIdentity


def encode(params: BoseParams, element: BoseElement) -> int:
    """Map an element to its 1-based loop index."""
    if element is IDENTITY:
        return 1
    assert isinstance(element, BosePoint)
    x, i = element
    if not (0 <= x < params.n and 0 <= i < 3):
        raise ElementError(
            ErrorCode.INDEX_OUT_OF_RANGE, f"{element} is not in Z_{params.n} x Z_3", (x, i)
        )
    return 2 + i * params.n + x


def decode(params: BoseParams, index: int) -> BoseElement:
    """Inverse of `encode`."""
    if not 1 <= index <= params.loop_order:
        raise ElementError(
            ErrorCode.INDEX_OUT_OF_RANGE,
            f"element {index} is outside 1..{params.loop_order}",
            (index,),
        )
    if index == 1:
        return IDENTITY
    i, x = divmod(index - 2, params.n)
    return BosePoint(x, i)


def elements(params: BoseParams) -> list[BoseElement]:
    """All elements in encoding order."""
    points: list[BoseElement] = [BosePoint(x, i) for i in range(3) for x in range(params.n)]
    return [IDENTITY, *points]


def bose_mul(params: BoseParams, e1: BoseElement, e2: BoseElement) -> BoseElement:
    """Product of the Bose Steiner loop."""
    if e1 is IDENTITY:
        return e2
    if e2 is IDENTITY:
        return e1
    assert isinstance(e1, BosePoint) and isinstance(e2, BosePoint)
    n = params.n
    (x, i), (y, j) = e1, e2
    if x == y:
        if i == j:
            return IDENTITY
        return BosePoint(x, (3 - i - j) % 3)
    if i == j:
        return BosePoint((x + y) * params.inv2 % n, (i + 1) % 3)
    if j == (i + 1) % 3:
        return BosePoint((2 * y - x) % n, i)
    # j == i - 1
    return BosePoint((2 * x - y) % n, j)


def associates(params: BoseParams, a: BoseElement, b: BoseElement, c: BoseElement) -> bool:
    """True iff (ab)c = a(bc) in the Bose loop."""
    return bose_mul(params, bose_mul(params, a, b), c) == bose_mul(
        params, a, bose_mul(params, b, c)
    )


def bose_loop(params: BoseParams) -> LoopTable:
    """Tabulate the Bose Steiner loop of order 3n + 1."""
    items = elements(params)
    rows = [[encode(params, bose_mul(params, a, b)) for b in items] for a in items]
    logger.debug("tabulated Bose loop n=%d (order %d)", params.n, params.loop_order)
    return validate_table(rows)


def bose_sts(params: BoseParams) -> TripleSystem:
    """The Bose STS(3n), points labelled encode(.) - 1."""
    n = params.n

    def point(x: int, i: int) -> int:
        return encode(params, BosePoint(x, i)) - 1

    blocks: list[Block] = [(point(x, 0), point(x, 1), point(x, 2)) for x in range(n)]
    for i in range(3):
        for x in range(n):
            for y in range(x + 1, n):
                mid = (x + y) * params.inv2 % n
                blocks.append((point(x, i), point(y, i), point(mid, (i + 1) % 3)))
    return validate_sts(3 * n, blocks)


def mp_criterion(params: BoseParams) -> bool:
    """True iff 7 is invertible in Z_n, i.e. the loop is predicted to have MP."""
    return math.gcd(params.n, 7) == 1


def bose_counterexample(params: BoseParams) -> tuple[BosePoint, BosePoint, BosePoint]:
    """The triple ((0,1), (0,0), (a,0)) with the smallest a != 0, 7a = 0.

    Its associator is trivial while the reordered triple ((0,1), (a,0), (0,0))
    does not associate, so the loop cannot have MP.

    Raises:
        ConstructionError: CRITERION_HOLDS when 7 is invertible in Z_n
    """
    if mp_criterion(params):
        raise ConstructionError(
            ErrorCode.CRITERION_HOLDS, f"7 is invertible mod {params.n}; no counterexample exists"
        )
    a = next(a for a in range(1, params.n) if 7 * a % params.n == 0)
    triple = (BosePoint(0, 1), BosePoint(0, 0), BosePoint(a, 0))
    swapped = (triple[0], triple[2], triple[1])
    if not associates(params, *triple) or associates(params, *swapped):
        raise ConsistencyError(f"counterexample {triple} does not behave as expected")
    return triple


def level_shift_violations(params: BoseParams) -> list[tuple[int, int, int]]:
    """Cases (x, y, i), x != y, where associativity of
    ((x,i), (x,i+1), (y,i-1)) disagrees with 7x = 7y (mod n)."""
    n = params.n
    bad: list[tuple[int, int, int]] = []
    for i in range(3):
        for x in range(n):
            for y in range(n):
                if x == y:
                    continue
                trivial = associates(
                    params, BosePoint(x, i), BosePoint(x, (i + 1) % 3), BosePoint(y, (i - 1) % 3)
                )
                if trivial != ((7 * x - 7 * y) % n == 0):
                    bad.append((x, y, i))
    return bad
