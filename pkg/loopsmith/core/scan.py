"""Row-chunked scans over the ordered-triple space.

A scan walks the first argument `a` of every ordered triple (a, b, c); a row
kernel handles all k*k pairs (b, c) of one row at once and reports the
witnesses it finds there. Rows are cut into contiguous chunks which run
either in-process or in a `ProcessPoolExecutor`. Workers share a
`multiprocessing` Event: the first worker that finds a witness sets it and
the others stop at their next row boundary.

Sequential scans return the lexicographically first witness. Parallel
early-exit scans return whichever witness finished first and say so through
`ScanResult.deterministic`. Exhaustive scans sort what they collect, so they
are deterministic in both modes.
"""

from __future__ import annotations

import logging
import multiprocessing
import time
from concurrent.futures import FIRST_COMPLETED, Future, ProcessPoolExecutor, wait
from dataclasses import dataclass
from typing import Any, Generic, Protocol, TypeVar

from ..config import Config

logger = logging.getLogger(__name__)

W = TypeVar("W")
W_co = TypeVar("W_co", covariant=True)


class RowKernel(Protocol[W_co]):
    """Finds witnesses among the triples whose first argument is row a0."""

    order: int

    def __call__(self, a0: int, exhaustive: bool) -> list[W_co]:
        """Return the row's witnesses in lexicographic order; at most one
        unless exhaustive."""
        ...


@dataclass(frozen=True)
class ScanOptions:
    """How a scan is executed.

    Attributes:
        jobs: Worker processes; 1 scans in-process
        chunk_rows: Rows per worker task
        parallel_min_order: Loops below this order are always scanned in-process
        exhaustive: Collect every witness instead of stopping at the first
    """

    jobs: int = 1
    chunk_rows: int = 8
    parallel_min_order: int = 48
    exhaustive: bool = False

    @classmethod
    def from_config(
        cls, config: Config, jobs: int | None = None, exhaustive: bool = False
    ) -> ScanOptions:
        return cls(
            jobs=jobs if jobs is not None else config.jobs,
            chunk_rows=config.chunk_rows,
            parallel_min_order=config.parallel_min_order,
            exhaustive=exhaustive,
        )

    def runs_parallel(self, order: int) -> bool:
        return self.jobs > 1 and order >= self.parallel_min_order


@dataclass(frozen=True)
class ScanResult(Generic[W]):
    """Witnesses found by a scan and whether their choice is reproducible."""

    witnesses: list[W]
    deterministic: bool

    @property
    def first(self) -> W | None:
        return self.witnesses[0] if self.witnesses else None


_worker_kernel: Any = None
_worker_cancel: Any = None


def _init_worker(kernel: RowKernel[Any], cancel: Any) -> None:
    global _worker_kernel, _worker_cancel
    _worker_kernel = kernel
    _worker_cancel = cancel


def _scan_chunk(start: int, stop: int, exhaustive: bool) -> list[Any]:
    found: list[Any] = []
    for a0 in range(start, stop):
        if not exhaustive and _worker_cancel.is_set():
            break
        hits = _worker_kernel(a0, exhaustive)
        if hits:
            found.extend(hits)
            if not exhaustive:
                _worker_cancel.set()
                break
    return found


def _scan_sequential(kernel: RowKernel[W], exhaustive: bool) -> ScanResult[W]:
    found: list[W] = []
    for a0 in range(kernel.order):
        hits = kernel(a0, exhaustive)
        if hits:
            found.extend(hits)
            if not exhaustive:
                break
    return ScanResult(witnesses=found, deterministic=True)


def _scan_parallel(kernel: RowKernel[W], options: ScanOptions) -> ScanResult[W]:
    ctx = multiprocessing.get_context()
    cancel = ctx.Event()
    k = kernel.order
    bounds = [(s, min(s + options.chunk_rows, k)) for s in range(0, k, options.chunk_rows)]
    found: list[W] = []
    with ProcessPoolExecutor(
        max_workers=options.jobs,
        mp_context=ctx,
        initializer=_init_worker,
        initargs=(kernel, cancel),
    ) as pool:
        pending: set[Future[list[W]]] = {
            pool.submit(_scan_chunk, start, stop, options.exhaustive) for start, stop in bounds
        }
        logger.debug("dispatched %d chunks of %d rows", len(pending), options.chunk_rows)
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for future in done:
                found.extend(future.result())
            if found and not options.exhaustive:
                cancel.set()
                for future in pending:
                    future.cancel()
                logger.debug("witness found, cancelled %d pending chunks", len(pending))
                break

    if options.exhaustive:
        return ScanResult(witnesses=sorted(found), deterministic=True)  # type: ignore[type-var]
    if found:
        logger.warning("parallel scan picked an arbitrary witness; use jobs=1 for the first one")
        return ScanResult(witnesses=[min(found)], deterministic=False)  # type: ignore[type-var]
    return ScanResult(witnesses=[], deterministic=True)


def scan_rows(kernel: RowKernel[W], options: ScanOptions | None = None) -> ScanResult[W]:
    """Run a row kernel over every first argument of the loop.

    Args:
        kernel: Picklable row kernel
        options: Execution options; defaults to a sequential early-exit scan

    Returns:
        ScanResult with the witnesses found
    """
    options = options or ScanOptions()
    parallel = options.runs_parallel(kernel.order)
    started = time.perf_counter()
    logger.info(
        "scan %s: order=%d jobs=%d exhaustive=%s",
        type(kernel).__name__,
        kernel.order,
        options.jobs if parallel else 1,
        options.exhaustive,
    )
    if parallel:
        result = _scan_parallel(kernel, options)
    else:
        result = _scan_sequential(kernel, options.exhaustive)
    logger.info(
        "scan %s finished in %.3fs with %d witness(es)",
        type(kernel).__name__,
        time.perf_counter() - started,
        len(result.witnesses),
    )
    return result
