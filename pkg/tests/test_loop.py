"""Unit tests for Cayley-table loops."""

import numpy as np
import pytest

from loopsmith.core.loop import (
    associativity_failure,
    associator,
    check_elements,
    commutativity_witness,
    exponent_two,
    exponent_two_witness,
    inverse_of_product_holds,
    inverses_profile,
    is_associative,
    is_commutative,
    is_steiner,
    left_divide,
    mul,
    right_divide,
    validate_table,
)
from loopsmith.errors import ElementError, ErrorCode, TableError


@pytest.mark.unit
class TestValidateTable:
    """Test suite for validate_table."""

    def test_order10_fixture_is_a_loop(self, order10):
        """Test that the order-10 fixture validates."""
        assert order10.order == 10
        assert order10.rows()[4][7] == 2

    def test_rows_round_trip(self):
        """Test that rows() returns the validated table."""
        rows = [[1, 2, 3], [2, 3, 1], [3, 1, 2]]
        assert validate_table(rows).rows() == tuple(tuple(r) for r in rows)

    def test_accepts_numpy_input(self):
        """Test that numpy arrays are accepted."""
        assert validate_table(np.array([[1, 2], [2, 1]])).order == 2

    def test_trivial_loop(self):
        """Test that the order-1 table is a loop."""
        assert validate_table([[1]]).order == 1

    @pytest.mark.parametrize(
        "raw, code, detail",
        [
            ([], ErrorCode.NOT_SQUARE, ()),
            ([[1, 2], [2]], ErrorCode.NOT_SQUARE, (2,)),
            ([[1, 3], [2, 1]], ErrorCode.ENTRY_OUT_OF_RANGE, (1, 2)),
            ([[1, 2], [2, 0]], ErrorCode.ENTRY_OUT_OF_RANGE, (2, 2)),
            ([[1, 1.5], [2, 1]], ErrorCode.ENTRY_OUT_OF_RANGE, (1, 2)),
            ([[1, 2], [2, 10**23]], ErrorCode.ENTRY_OUT_OF_RANGE, (2, 2)),
            ([[1, 2], [-(10**23), 1]], ErrorCode.ENTRY_OUT_OF_RANGE, (2, 1)),
            ([[1, 10**23], [2]], ErrorCode.NOT_SQUARE, (2,)),
            ([[1, 2], [2, 2]], ErrorCode.COLUMN_NOT_PERMUTATION, (2,)),
            ([[1, 1], [2, 2]], ErrorCode.ROW_NOT_PERMUTATION, (1,)),
            ([[2, 1], [1, 2]], ErrorCode.NO_IDENTITY, ()),
        ],
    )
    def test_rejects_invalid_tables(self, raw, code, detail):
        """Test that each validation failure raises its own code."""
        with pytest.raises(TableError) as excinfo:
            validate_table(raw)
        assert excinfo.value.code is code
        assert excinfo.value.detail == detail
        assert str(excinfo.value).startswith(f"{code.value}: ")

    def test_cells_are_read_only(self, order10):
        """Test that the table cannot be modified."""
        with pytest.raises(ValueError):
            order10.cells[0, 0] = 3

    def test_equality_compares_tables(self, order10, c2):
        """Test that loops compare by table."""
        assert order10 == validate_table(order10.rows())
        assert order10 != c2


@pytest.mark.unit
class TestArithmetic:
    """Products, divisions and the associator on the order-10 fixture."""

    def test_mul(self, order10):
        """Test products from the fixture."""
        assert mul(order10, 5, 8) == 2
        assert mul(order10, 2, 5) == 8
        assert mul(order10, 1, 7) == 7

    def test_left_divide(self, order10):
        """Test that a\b solves a*x = b."""
        assert left_divide(order10, 6, 7) == 5
        assert mul(order10, 6, 5) == 7

    def test_right_divide(self, order10):
        """Test that b/a solves x*a = b."""
        assert right_divide(order10, 3, 4) == 2
        assert mul(order10, 2, 3) == 4

    def test_associator(self, order10):
        """Test associators of a non-associating and an associating triple."""
        assert associator(order10, 2, 5, 3) == 5
        assert associator(order10, 2, 3, 4) == 1

    def test_associator_definition(self, order10):
        """Test that (a(bc))u = (ab)c for the associator u."""
        u = associator(order10, 2, 5, 3)
        lhs = mul(order10, mul(order10, 2, mul(order10, 5, 3)), u)
        assert lhs == mul(order10, mul(order10, 2, 5), 3)

    @pytest.mark.parametrize("args", [(0, 1), (11, 1), (1, -1)])
    def test_out_of_range_elements(self, order10, args):
        """Test that elements outside 1..k are rejected."""
        with pytest.raises(ElementError) as excinfo:
            mul(order10, *args)
        assert excinfo.value.code is ErrorCode.INDEX_OUT_OF_RANGE

    def test_check_elements_rejects_bool(self, c2):
        """Test that booleans are not accepted as elements."""
        with pytest.raises(ElementError):
            check_elements(c2, True)


@pytest.mark.unit
class TestPredicates:
    """Commutativity, inverses, exponent 2 and associativity."""

    def test_order10_is_steiner(self, order10):
        """Test that the order-10 loop is a Steiner loop."""
        assert is_commutative(order10)
        assert exponent_two(order10)
        assert inverses_profile(order10).has_ip
        assert is_steiner(order10)

    def test_c2_is_steiner(self, c2):
        """Test that C2 is a Steiner loop."""
        assert is_steiner(c2)

    def test_c3_has_no_exponent_two(self, c3):
        """Test that C3 has IP but not exponent 2."""
        assert exponent_two_witness(c3) == 2
        assert not is_steiner(c3)
        assert inverses_profile(c3).has_ip

    def test_inverses_of_c3(self, c3):
        """Test the two-sided inverses of C3."""
        profile = inverses_profile(c3)
        assert profile.left_inverse == (1, 3, 2)
        assert profile.right_inverse == (1, 3, 2)

    def test_non_ip_loop(self, non_ip_loop):
        """Test the witnesses of the non-IP loop."""
        assert exponent_two(non_ip_loop)
        assert commutativity_witness(non_ip_loop) == (2, 3)
        profile = inverses_profile(non_ip_loop)
        assert not profile.has_ip
        assert profile.witness == (2, 3)
        assert not is_steiner(non_ip_loop)

    def test_s3_is_a_non_commutative_group(self, s3):
        """Test that S3 is associative but not commutative."""
        assert not is_commutative(s3)
        assert is_associative(s3)
        assert associativity_failure(s3) is None

    def test_order10_is_not_associative(self, order10):
        """Test that the order-10 loop has a non-associating triple."""
        a, b, c = associativity_failure(order10)
        assert mul(order10, mul(order10, a, b), c) != mul(order10, a, mul(order10, b, c))
        assert not is_associative(order10)

    def test_inverse_of_product(self, order10, s3, non_ip_loop):
        """Test the inverse-of-product law with and without IP."""
        assert inverse_of_product_holds(order10) == (True, None)
        assert inverse_of_product_holds(s3) == (True, None)
        assert inverse_of_product_holds(non_ip_loop) == (False, (2, 3))


@pytest.mark.unit
class TestCorpusLaws:
    """Identities that hold in every loop of the corpus."""

    def test_division_inverse_laws(self, corpus_loop):
        """Test that divisions invert multiplication."""
        for a in corpus_loop.elements():
            for b in corpus_loop.elements():
                assert mul(corpus_loop, a, left_divide(corpus_loop, a, b)) == b
                assert mul(corpus_loop, right_divide(corpus_loop, a, b), a) == b

    def test_associator_with_identity_argument(self, corpus_loop):
        """Test that the associator is 1 when any argument is 1."""
        for a in corpus_loop.elements():
            for b in corpus_loop.elements():
                assert associator(corpus_loop, 1, a, b) == 1
                assert associator(corpus_loop, a, 1, b) == 1
                assert associator(corpus_loop, a, b, 1) == 1

    def test_associator_is_trivial_exactly_in_groups(self, corpus_loop):
        """Test that associators are all 1 in a group and not all 1 otherwise."""
        failure = associativity_failure(corpus_loop)
        if failure is not None:
            assert associator(corpus_loop, *failure) != 1
            return
        elements = corpus_loop.elements()
        for a in elements:
            for b in elements:
                for c in elements:
                    assert associator(corpus_loop, a, b, c) == 1
