"""Tests for the criterion-versus-brute-force experiment."""

import pytest

from loopsmith.core.experiment import (
    experiment_row,
    is_bose_order,
    published_kind,
    run_experiment,
    unreachable_published_orders,
)
from loopsmith.schemas import MPKind


@pytest.mark.unit
class TestPublishedOrders:
    def test_published_kind(self):
        """Test the kind the published lists assign to an order."""
        assert published_kind(22) is MPKind.FAILS
        assert published_kind(16) is MPKind.MP
        assert published_kind(10) is None

    @pytest.mark.parametrize("order, expected", [(10, True), (22, True), (13, False), (79, False)])
    def test_is_bose_order(self, order, expected):
        """Test which orders are 3n+1 for odd n >= 3."""
        assert is_bose_order(order) is expected

    def test_79_is_unreachable(self):
        """Test that 79 is the only unreachable published order."""
        assert unreachable_published_orders() == [79]


@pytest.mark.unit
class TestRunExperiment:
    """Test suite for run_experiment."""

    def test_row_for_7(self):
        """Test the experiment row for n = 7."""
        row = experiment_row(7)
        assert row.order == 22
        assert row.criterion is False
        assert row.brute_verdict is MPKind.FAILS
        assert row.published is MPKind.FAILS
        assert row.agree

    @pytest.mark.parametrize("bounds", [(1, 9), (2, 9), (9, 5)])
    def test_bad_bounds_fail_eagerly(self, bounds):
        """Test that invalid bounds raise before any row is computed."""
        with pytest.raises(ValueError):
            run_experiment(*bounds)

    def test_even_bounds_are_skipped(self):
        """Test that only odd n are swept."""
        assert [row.n for row in run_experiment(4, 8)] == [5, 7]

    def test_prefix_agrees(self):
        """Test that brute force agrees with the criterion for n up to 21."""
        rows = list(run_experiment(3, 21))
        assert [row.n for row in rows] == list(range(3, 22, 2))
        assert all(row.agree for row in rows)
        failing = {row.order for row in rows if row.brute_verdict is MPKind.FAILS}
        assert failing == {22, 64}
        for row in rows:
            if row.published is not None:
                assert row.published is row.brute_verdict

    @pytest.mark.slow
    def test_full_sweep(self):
        """Test the full sweep over odd n up to 51."""
        rows = list(run_experiment(3, 51))
        assert len(rows) == 25
        assert all(row.agree for row in rows)
        failing = {row.order for row in rows if row.brute_verdict is MPKind.FAILS}
        assert failing == {22, 64, 106, 148}
        assert sum(row.brute_verdict is MPKind.MP for row in rows) == 21
