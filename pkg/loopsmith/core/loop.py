"""Cayley-table loops.

A loop is stored as a k x k numpy array of 0-based element indices with the
identity at index 0. Every public function in this module speaks 1-based
element indices (identity = 1), the convention of the table files.

Example:
    from loopsmith.core.loop import validate_table, mul, associator

    c2 = validate_table([[1, 2], [2, 1]])
    assert mul(c2, 2, 2) == 1
    assert associator(c2, 2, 2, 2) == 1
"""

from __future__ import annotations

import logging
import numbers
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np
import numpy.typing as npt

from ..errors import ElementError, ErrorCode, TableError

logger = logging.getLogger(__name__)

Pair = tuple[int, int]
Triple = tuple[int, int, int]
IntArray = npt.NDArray[np.intp]
BoolArray = npt.NDArray[np.bool_]


class LoopTable:
    """An immutable finite loop given by its Cayley table.

    Build instances with `validate_table`; the constructor trusts its input.

    Attributes:
        order: Number of elements k
        cells: Read-only k x k array, cells[a, b] = a*b with 0-based indices
        ldiv: Read-only array, ldiv[a, b] = the x with a*x = b (0-based)
        rdiv: Read-only array, rdiv[a, b] = the x with x*a = b (0-based)
    """

    def __init__(self, cells: IntArray):
        self.cells: IntArray = np.ascontiguousarray(cells, dtype=np.intp)
        self.cells.setflags(write=False)
        self.order: int = int(self.cells.shape[0])
        self.ldiv: IntArray = np.ascontiguousarray(np.argsort(self.cells, axis=1), dtype=np.intp)
        self.rdiv: IntArray = np.ascontiguousarray(np.argsort(self.cells, axis=0).T, dtype=np.intp)
        self.ldiv.setflags(write=False)
        self.rdiv.setflags(write=False)

    def rows(self) -> tuple[tuple[int, ...], ...]:
        """Return the table with 1-based entries, row by row."""
        return tuple(tuple(int(v) + 1 for v in row) for row in self.cells)

    def elements(self) -> range:
        """Return the 1-based element indices."""
        return range(1, self.order + 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LoopTable):
            return NotImplemented
        return self.order == other.order and bool(np.array_equal(self.cells, other.cells))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"LoopTable(order={self.order})"


def _is_integer(value: Any) -> bool:
    return isinstance(value, numbers.Integral) and not isinstance(value, bool)


def _first_bad_line(sorted_lines: IntArray, k: int, axis: int) -> int | None:
    expected = np.arange(1, k + 1)
    if axis == 0:
        ok = (sorted_lines == expected[:, None]).all(axis=0)
    else:
        ok = (sorted_lines == expected[None, :]).all(axis=1)
    bad = np.flatnonzero(~ok)
    return int(bad[0]) + 1 if bad.size else None


def validate_table(raw: Sequence[Sequence[int]] | IntArray) -> LoopTable:
    """Validate a 1-based Cayley table and return it as a LoopTable.

    Checks run in a fixed order: shape, entry range, columns, rows, identity.

    Args:
        raw: Square array of integers in 1..k, row a column b holding a*b

    Returns:
        The validated loop

    Raises:
        TableError: NOT_SQUARE, ENTRY_OUT_OF_RANGE, COLUMN_NOT_PERMUTATION,
            ROW_NOT_PERMUTATION or NO_IDENTITY
    """
    rows = [list(row) for row in raw]
    k = len(rows)
    if k == 0:
        raise TableError(ErrorCode.NOT_SQUARE, "table is empty")
    for r, row in enumerate(rows, start=1):
        if len(row) != k:
            raise TableError(
                ErrorCode.NOT_SQUARE, f"row {r} has {len(row)} entries, expected {k}", (r,)
            )
    # Entries may exceed int64 until range-checked
    for r, row in enumerate(rows, start=1):
        for c, value in enumerate(row, start=1):
            if not _is_integer(value):
                raise TableError(
                    ErrorCode.ENTRY_OUT_OF_RANGE, f"entry ({r},{c}) is not an integer", (r, c)
                )
            if not 1 <= value <= k:
                raise TableError(
                    ErrorCode.ENTRY_OUT_OF_RANGE,
                    f"entry ({r},{c}) = {int(value)} is outside 1..{k}",
                    (r, c),
                )

    table = np.array(rows, dtype=np.int64)

    bad_column = _first_bad_line(np.sort(table, axis=0), k, axis=0)
    if bad_column is not None:
        raise TableError(
            ErrorCode.COLUMN_NOT_PERMUTATION, f"column {bad_column} repeats an entry", (bad_column,)
        )
    bad_row = _first_bad_line(np.sort(table, axis=1), k, axis=1)
    if bad_row is not None:
        raise TableError(
            ErrorCode.ROW_NOT_PERMUTATION, f"row {bad_row} repeats an entry", (bad_row,)
        )

    expected = np.arange(1, k + 1)
    if not (np.array_equal(table[0], expected) and np.array_equal(table[:, 0], expected)):
        raise TableError(ErrorCode.NO_IDENTITY, "element 1 is not a two-sided identity")

    return LoopTable(table - 1)


def check_elements(loop: LoopTable, *elements: int) -> None:
    """Raise ElementError unless every element lies in 1..order."""
    for e in elements:
        if not _is_integer(e) or not 1 <= e <= loop.order:
            raise ElementError(
                ErrorCode.INDEX_OUT_OF_RANGE,
                f"element {e!r} is outside 1..{loop.order}",
                (int(e),) if _is_integer(e) else (),
            )


def mul(loop: LoopTable, a: int, b: int) -> int:
    """Return a*b."""
    check_elements(loop, a, b)
    return int(loop.cells[a - 1, b - 1]) + 1


def left_divide(loop: LoopTable, a: int, b: int) -> int:
    """Return the unique x with a*x = b."""
    check_elements(loop, a, b)
    return int(loop.ldiv[a - 1, b - 1]) + 1


def right_divide(loop: LoopTable, a: int, b: int) -> int:
    """Return the unique x with x*a = b."""
    check_elements(loop, a, b)
    return int(loop.rdiv[a - 1, b - 1]) + 1


def associator(loop: LoopTable, a: int, b: int, c: int) -> int:
    """Return the unique u with (a*(b*c))*u = (a*b)*c."""
    check_elements(loop, a, b, c)
    t = loop.cells
    a0, b0, c0 = a - 1, b - 1, c - 1
    left = t[t[a0, b0], c0]
    right = t[a0, t[b0, c0]]
    return int(loop.ldiv[right, left]) + 1


def associating_mask(cells: IntArray, a0: int) -> BoolArray:
    """Return mask[b, c] = ((a*b)*c == a*(b*c)) for a fixed 0-based row a."""
    return cells[cells[a0], :] == cells[a0][cells]  # type: ignore[no-any-return]


def first_true(mask: BoolArray) -> tuple[int, ...] | None:
    """Return the row-major first index where mask holds, or None."""
    hits = np.argwhere(mask)
    if hits.size == 0:
        return None
    return tuple(int(v) for v in hits[0])


@dataclass(frozen=True)
class InverseProfile:
    """Left/right inverses of every element and the inverse-property verdict.

    Inverse tuples are indexed by element - 1 and hold 1-based elements.
    """

    has_ip: bool
    witness: Pair | None
    left_inverse: tuple[int, ...]
    right_inverse: tuple[int, ...]


def inverses_profile(loop: LoopTable) -> InverseProfile:
    """Compute inverses and decide the inverse property.

    The candidate inverse map is x -> x^rho (x * x^rho = 1). If left and right
    inverses differ anywhere, one of the IP laws fails under that map, so a
    single scan of both laws decides the property.

    Returns:
        InverseProfile whose witness (x, y) refutes x^-1(xy) = y or
        (yx)x^-1 = y when has_ip is False
    """
    t = loop.cells
    k = loop.order
    left_inv = loop.rdiv[:, 0]
    right_inv = loop.ldiv[:, 0]
    ys = np.arange(k)

    law_left = t[right_inv[:, None], t] == ys[None, :]
    law_right = t[t.T, right_inv[:, None]] == ys[None, :]
    witness = first_true(~(law_left & law_right))
    return InverseProfile(
        has_ip=witness is None,
        witness=None if witness is None else (witness[0] + 1, witness[1] + 1),
        left_inverse=tuple(int(v) + 1 for v in left_inv),
        right_inverse=tuple(int(v) + 1 for v in right_inv),
    )


def exponent_two_witness(loop: LoopTable) -> int | None:
    """Return the first x with x*x != 1, or None."""
    bad = np.flatnonzero(np.diagonal(loop.cells) != 0)
    return int(bad[0]) + 1 if bad.size else None


def exponent_two(loop: LoopTable) -> bool:
    """True iff x*x = 1 for every x."""
    return exponent_two_witness(loop) is None


def commutativity_witness(loop: LoopTable) -> Pair | None:
    """Return the first pair (a, b) with a*b != b*a, or None."""
    hit = first_true(loop.cells != loop.cells.T)
    return None if hit is None else (hit[0] + 1, hit[1] + 1)


def is_commutative(loop: LoopTable) -> bool:
    """True iff a*b = b*a for every pair."""
    return commutativity_witness(loop) is None


def is_steiner(loop: LoopTable) -> bool:
    """True iff the loop has the inverse property and exponent 2."""
    return exponent_two(loop) and inverses_profile(loop).has_ip


def inverse_of_product_holds(loop: LoopTable) -> tuple[bool, Pair | None]:
    """Check (xy)^-1 = y^-1 x^-1 using right inverses.

    Returns:
        (holds, first refuting pair (x, y) or None)
    """
    t = loop.cells
    inv = loop.ldiv[:, 0]
    lhs = inv[t]
    rhs = t[np.ix_(inv, inv)].T
    hit = first_true(lhs != rhs)
    if hit is None:
        return True, None
    return False, (hit[0] + 1, hit[1] + 1)


def associativity_failure(loop: LoopTable) -> Triple | None:
    """Return the lexicographically first non-associating triple, or None."""
    for a0 in range(loop.order):
        hit = first_true(~associating_mask(loop.cells, a0))
        if hit is not None:
            return a0 + 1, hit[0] + 1, hit[1] + 1
    return None


def is_associative(loop: LoopTable) -> bool:
    """True iff the loop is a group."""
    return associativity_failure(loop) is None
