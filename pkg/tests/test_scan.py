"""Tests for row-chunked triple scans, sequential and parallel."""

import dataclasses

import pytest

from loopsmith.config import Config
from loopsmith.core.bose import BoseParams, bose_loop
from loopsmith.core.scan import ScanOptions, scan_rows
from loopsmith.core.verdict import MoufangIdentity, MoufangKernel, TheoremKernel, mp_status
from loopsmith.schemas import MPKind


class EveryDiagonalKernel:
    """Reports (a, a, a) for rows listed in `rows`; used to pin scan order."""

    def __init__(self, order, rows):
        self.order = order
        self.rows = rows

    def __call__(self, a0, exhaustive):
        return [(a0 + 1, a0 + 1, a0 + 1)] if a0 in self.rows else []


@pytest.fixture(scope="module")
def bose7():
    return bose_loop(BoseParams(n=7))


@pytest.mark.unit
class TestScanOptions:
    def test_from_config(self):
        """Test that scan options take unset fields from Config."""
        options = ScanOptions.from_config(Config(), jobs=3, exhaustive=True)
        assert options == ScanOptions(jobs=3, chunk_rows=8, parallel_min_order=48, exhaustive=True)

    def test_jobs_default_to_config(self, monkeypatch):
        """Test that jobs falls back to LOOPSMITH_JOBS."""
        monkeypatch.setenv("LOOPSMITH_JOBS", "5")
        assert ScanOptions.from_config(Config()).jobs == 5

    def test_small_loops_stay_sequential(self):
        """Test the parallel threshold."""
        options = ScanOptions(jobs=4)
        assert not options.runs_parallel(10)
        assert options.runs_parallel(48)
        assert not ScanOptions(jobs=1).runs_parallel(100)


@pytest.mark.unit
class TestSequentialScan:
    def test_early_exit_returns_first_row(self):
        """Test that an early-exit scan stops at the first witness row."""
        result = scan_rows(EveryDiagonalKernel(10, {3, 7}))
        assert result.witnesses == [(4, 4, 4)]
        assert result.first == (4, 4, 4)
        assert result.deterministic

    def test_exhaustive_collects_all_rows(self):
        """Test that an exhaustive scan returns every witness in row order."""
        result = scan_rows(EveryDiagonalKernel(10, {7, 3}), ScanOptions(exhaustive=True))
        assert result.witnesses == [(4, 4, 4), (8, 8, 8)]

    def test_no_witness(self):
        """Test a scan that finds nothing."""
        result = scan_rows(EveryDiagonalKernel(5, set()))
        assert result.first is None
        assert result.deterministic


@pytest.mark.integration
class TestParallelScan:
    """Process-pool scans; parallel_min_order=1 forces the pool on small loops."""

    @pytest.fixture
    def parallel(self):
        return ScanOptions(jobs=2, chunk_rows=3, parallel_min_order=1)

    def test_exhaustive_matches_sequential(self, bose7, parallel):
        """Test that pooled exhaustive scans equal sequential ones."""
        kernel = MoufangKernel(bose7, MoufangIdentity.THIRD)
        sequential = scan_rows(kernel, ScanOptions(exhaustive=True))
        pooled = scan_rows(kernel, dataclasses.replace(parallel, exhaustive=True))
        assert pooled.witnesses == sequential.witnesses
        assert pooled.deterministic

    def test_theorem_kernel_crosses_process_boundary(self, bose7, parallel):
        """Test that the theorem kernel runs in worker processes."""
        result = scan_rows(TheoremKernel(bose7), parallel)
        assert result.first is not None
        assert not result.deterministic

    def test_mp_status_agrees(self, order10, bose7, parallel):
        """Test that pooled verdicts match the sequential ones."""
        assert mp_status(order10, parallel).kind is MPKind.MP
        verdict = mp_status(bose7, parallel)
        assert verdict.kind is MPKind.FAILS
        assert not verdict.deterministic
