"""Tests for lightsout.gf2 module."""

import numpy as np
import pytest

from lightsout import gf2
from lightsout.errors import ContractViolation, GraphFormatError
from lightsout.gf2 import BitMatrix, BitVec


class TestBitVec:
    def test_from_string_order(self):
        v = BitVec.from_string("1101")
        assert len(v) == 4
        assert list(v) == [1, 1, 0, 1]
        assert v.to_string() == "1101"

    def test_from_string_rejects_garbage(self):
        with pytest.raises(GraphFormatError):
            BitVec.from_string("10a1")

    def test_int_encoding_lsb_is_vertex_zero(self):
        assert BitVec.from_string("100").to_int() == 1
        assert BitVec.from_int(6, 3).to_string() == "011"

    def test_from_int_overflow(self):
        with pytest.raises(ContractViolation):
            BitVec.from_int(8, 3)

    def test_addition_is_xor(self):
        a = BitVec.from_string("1100")
        b = BitVec.from_string("1010")
        assert (a + b).to_string() == "0110"
        assert a + a == BitVec.zeros(4)

    def test_dot(self):
        a = BitVec.from_string("1101")
        assert a.dot(BitVec.from_string("1001")) == 0
        assert a.dot(BitVec.from_string("0100")) == 1

    def test_length_mismatch(self):
        with pytest.raises(ContractViolation):
            BitVec.zeros(3) + BitVec.zeros(4)

    def test_support_and_weight(self):
        v = BitVec.from_string("01101")
        assert v.support() == [1, 2, 4]
        assert v.weight() == 3
        assert v.any()
        assert not BitVec.zeros(5).any()

    def test_with_bit_is_a_copy(self):
        v = BitVec.zeros(3)
        w = v.with_bit(1, 1)
        assert v.to_string() == "000"
        assert w.to_string() == "010"

    def test_index_out_of_range(self):
        with pytest.raises(IndexError):
            BitVec.zeros(3)[3]

    def test_words_are_read_only(self):
        v = BitVec.ones(10)
        with pytest.raises(ValueError):
            v.words[0] = 0

    def test_spans_several_words(self):
        n = 130
        v = BitVec.unit(n, 0) + BitVec.unit(n, 64) + BitVec.unit(n, 129)
        assert v.support() == [0, 64, 129]
        assert v.weight() == 3
        assert v.to_int() == 1 | (1 << 64) | (1 << 129)
        assert BitVec.ones(n).weight() == n

    def test_empty(self):
        v = BitVec.zeros(0)
        assert len(v) == 0
        assert v.to_string() == ""
        assert v == BitVec.from_string("")

    def test_hash_matches_equality(self):
        assert hash(BitVec.from_string("101")) == hash(BitVec.from_int(5, 3))


class TestBitMatrix:
    def test_dense_roundtrip(self):
        dense = np.array([[1, 0, 1], [0, 1, 1]], dtype=np.uint8)
        M = BitMatrix.from_dense(dense)
        assert M.shape == (2, 3)
        assert np.array_equal(M.to_dense(), dense)
        assert M.get(0, 2) == 1
        assert M.get(1, 0) == 0

    def test_transpose(self):
        M = BitMatrix.from_dense([[1, 1, 0], [0, 0, 1]])
        assert M.transpose().to_dense().tolist() == [[1, 0], [1, 0], [0, 1]]

    def test_matvec(self):
        M = BitMatrix.from_dense([[1, 1, 0], [0, 1, 1], [1, 1, 1]])
        assert M.matvec(BitVec.from_string("110")).to_string() == "010"

    def test_symmetric(self):
        assert BitMatrix.identity(5).is_symmetric()
        assert not BitMatrix.from_dense([[1, 1], [0, 1]]).is_symmetric()

    def test_row_and_column(self):
        M = BitMatrix.from_dense([[1, 0], [1, 1]])
        assert M.row(1).to_string() == "11"
        assert M.column(1).to_string() == "01"

    def test_from_rows(self):
        rows = [BitVec.from_string("10"), BitVec.from_string("01")]
        assert BitMatrix.from_rows(rows) == BitMatrix.identity(2)

    def test_append_column(self):
        M = BitMatrix.identity(2).append_column(BitVec.from_string("11"))
        assert M.to_dense().tolist() == [[1, 0, 1], [0, 1, 1]]


class TestElimination:
    def test_rank_identity(self):
        assert gf2.rank(BitMatrix.identity(70)) == 70

    def test_rank_all_ones(self):
        assert gf2.rank(BitMatrix.from_dense(np.ones((4, 4), dtype=np.uint8))) == 1

    def test_rref_is_reduced(self):
        M = BitMatrix.from_dense([[1, 1, 0], [1, 1, 1], [0, 1, 1]])
        reduction = gf2.rref(M)
        assert reduction.rank == 3
        assert list(reduction.pivot_cols) == [0, 1, 2]
        assert reduction.matrix == BitMatrix.identity(3)

    def test_nullspace_vectors_are_null(self):
        rng = np.random.default_rng(3)
        dense = rng.integers(0, 2, size=(9, 12)).astype(np.uint8)
        M = BitMatrix.from_dense(dense)
        basis = gf2.nullspace_basis(M)
        assert len(basis) == 12 - gf2.rank(M)
        for v in basis:
            assert not M.matvec(v).any()

    def test_nullspace_canonical_basis(self):
        M = BitMatrix.from_dense([[1, 1], [1, 1]])
        assert [v.to_string() for v in gf2.nullspace_basis(M)] == ["11"]

    def test_solve_consistent(self):
        M = BitMatrix.from_dense([[1, 1, 0], [1, 1, 1], [0, 1, 1]])
        x = gf2.solve(M, BitVec.ones(3))
        assert x.to_string() == "010"

    def test_solve_inconsistent(self):
        M = BitMatrix.from_dense([[1, 1], [1, 1]])
        assert gf2.solve(M, BitVec.from_string("10")) is None

    def test_solve_with_kernel_free_variables_zero(self):
        M = BitMatrix.from_dense([[1, 1], [1, 1]])
        x, basis = gf2.solve_with_kernel(M, BitVec.from_string("11"))
        assert x.to_string() == "10"
        assert [v.to_string() for v in basis] == ["11"]

    def test_solve_rhs_length_checked(self):
        with pytest.raises(ContractViolation):
            gf2.solve(BitMatrix.identity(3), BitVec.zeros(2))

    def test_wide_random_systems(self):
        rng = np.random.default_rng(11)
        for _ in range(5):
            dense = rng.integers(0, 2, size=(80, 80)).astype(np.uint8)
            M = BitMatrix.from_dense(dense)
            x_true = BitVec.from_array(rng.integers(0, 2, size=80))
            b = M.matvec(x_true)
            x = gf2.solve(M, b)
            assert x is not None
            assert M.matvec(x) == b

    def test_empty_matrix(self):
        M = BitMatrix.zeros(0, 0)
        assert gf2.rank(M) == 0
        assert gf2.nullspace_basis(M) == []
