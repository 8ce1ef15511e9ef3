"""Criterion versus brute force over a range of Bose parameters.

For each odd n the Bose loop of order 3n + 1 is classified by exhaustive
verification and compared with the prediction "MP iff gcd(n, 7) = 1". Rows
also carry the classification that the published computations assign to
their order, when that order was reported.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Iterator

from ..schemas import ExperimentRow, MPKind
from .bose import BoseParams, bose_loop, mp_criterion
from .scan import ScanOptions
from .verdict import mp_status

logger = logging.getLogger(__name__)

PUBLISHED_MP_ORDERS = frozenset(
    {16, 28, 34, 40, 46, 52, 58, 79, 76, 82, 88, 94, 100, 112, 118, 124, 130, 136, 142, 154}
)
PUBLISHED_FAILING_ORDERS = frozenset({22, 64, 106, 148})


def published_kind(order: int) -> MPKind | None:
    if order in PUBLISHED_FAILING_ORDERS:
        return MPKind.FAILS
    if order in PUBLISHED_MP_ORDERS:
        return MPKind.MP
    return None


def is_bose_order(order: int) -> bool:
    """True iff order = 3n + 1 for some odd n >= 3."""
    n, rest = divmod(order - 1, 3)
    return rest == 0 and n >= 3 and n % 2 == 1


def unreachable_published_orders() -> list[int]:
    """Published orders that no Bose loop has (79 = 1 mod 6)."""
    published = PUBLISHED_MP_ORDERS | PUBLISHED_FAILING_ORDERS
    return sorted(order for order in published if not is_bose_order(order))


def experiment_row(n: int, options: ScanOptions | None = None) -> ExperimentRow:
    """Classify the Bose loop for one n and compare with the criterion."""
    params = BoseParams(n=n)
    started = time.perf_counter()
    verdict = mp_status(bose_loop(params), options)
    criterion = mp_criterion(params)
    row = ExperimentRow(
        n=n,
        order=params.loop_order,
        criterion=criterion,
        brute_verdict=verdict.kind,
        agree=criterion == (verdict.kind is MPKind.MP),
        published=published_kind(params.loop_order),
    )
    logger.info(
        "n=%d order=%d verdict=%s criterion=%s (%.2fs)",
        n,
        row.order,
        row.brute_verdict.value,
        criterion,
        time.perf_counter() - started,
    )
    return row


def run_experiment(
    min_n: int = 3, max_n: int = 51, options: ScanOptions | None = None
) -> Iterator[ExperimentRow]:
    """Lazily produce one row per odd n in [min_n, max_n]; even n are skipped.

    Raises:
        ValueError: min_n < 3 or max_n < min_n
    """
    if min_n < 3:
        raise ValueError(f"min_n must be at least 3, got {min_n}")
    if max_n < min_n:
        raise ValueError(f"max_n ({max_n}) is below min_n ({min_n})")
    for order in unreachable_published_orders():
        logger.warning("published order %d is not 3n + 1 for an odd n; no row can match it", order)
    start = min_n if min_n % 2 == 1 else min_n + 1
    return (experiment_row(n, options) for n in range(start, max_n + 1, 2))
