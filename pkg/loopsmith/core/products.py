"""Direct products of loops.

The pair (a, b) of L1 x L2 is element (a - 1) * k2 + b, so (1, 1) is the
identity 1 and the first factor varies slowest.
"""

from ..errors import ElementError, ErrorCode
from .loop import LoopTable


def product_element(k2: int, a: int, b: int) -> int:
    """Index of the pair (a, b) when the second factor has order k2."""
    if not 1 <= b <= k2 or a < 1:
        raise ElementError(ErrorCode.INDEX_OUT_OF_RANGE, f"({a}, {b}) is not a valid pair", (a, b))
    return (a - 1) * k2 + b


def product_components(k2: int, element: int) -> tuple[int, int]:
    """Inverse of `product_element`."""
    if element < 1:
        raise ElementError(ErrorCode.INDEX_OUT_OF_RANGE, f"element {element} < 1", (element,))
    a0, b0 = divmod(element - 1, k2)
    return a0 + 1, b0 + 1


def direct_product(first: LoopTable, second: LoopTable) -> LoopTable:
    """Componentwise product table of order k1 * k2."""
    k1, k2 = first.order, second.order
    cells = first.cells[:, None, :, None] * k2 + second.cells[None, :, None, :]
    return LoopTable(cells.reshape(k1 * k2, k1 * k2))

