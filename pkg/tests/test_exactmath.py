from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrangeo import exactmath as qm
from arrangeo.errors import DimensionError, RankDeficiencyError, SingularError

from six_lines import U1
from strategies import any_matrices, matrices, rationals, square_matrices


def cols(*vs):
    return qm.transpose([qm.vector(v) for v in vs])


class TestParsing:
    @pytest.mark.parametrize("text,value", [("3", F(3)), ("-1/2", F(-1, 2)), ("4/6", F(2, 3)), (" 7 ", F(7)), (5, F(5))])
    def test_accepts(self, text, value):
        assert qm.parse_rational(text) == value

    @pytest.mark.parametrize("text", ["1/0", "1.5", "abc", "", "1/-2", "--1", 1.5, True, None])
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            qm.parse_rational(text)

    @given(rationals)
    def test_round_trip(self, x):
        assert qm.parse_rational(qm.format_rational(x)) == x

    def test_format(self):
        assert qm.format_rational(F(-6, 4)) == "-3/2"
        assert qm.format_rational(F(8, 2)) == "4"


class TestDet:
    def test_examples(self):
        assert qm.det(qm.identity(3)) == 1
        assert qm.det([[0, 1], [1, 0]]) == -1
        assert qm.det([[1, 0, 0], [0, 1, 0], [1, 1, 1]]) == 1

    def test_non_square(self):
        with pytest.raises(DimensionError):
            qm.det([[1, 2, 3], [4, 5, 6]])

    @given(square_matrices())
    def test_bareiss_matches_cofactor(self, M):
        assert qm.det(M) == qm.det_cofactor(M)

    @given(square_matrices(), square_matrices())
    def test_multiplicative(self, A, B):
        if len(A) == len(B):
            assert qm.det(qm.matmul(A, B)) == qm.det(A) * qm.det(B)

    def test_fractional_entries(self):
        assert qm.det([[F(1, 2), F(1, 3)], [F(1, 4), F(1, 5)]]) == F(1, 10) - F(1, 12)


class TestRank:
    def test_examples(self):
        assert qm.rank(qm.zeros(2, 3)) == 0
        assert qm.rank([[1, 0, 0], [0, 1, 0], [1, 1, 0]]) == 2
        assert qm.rank(qm.identity(4)) == 4

    @given(any_matrices())
    def test_rank_nullity(self, M):
        ncols = len(M[0])
        assert qm.rank(M) + len(qm.kernel_basis(M)) == ncols

    @given(any_matrices())
    def test_transpose_rank(self, M):
        assert qm.rank(M) == qm.rank(qm.transpose(M))


class TestSolve:
    def test_identity(self):
        assert qm.solve_unique(qm.identity(2), [3, F(1, 2)]) == (3, F(1, 2))

    def test_six_line_examples(self):
        A = cols(U1[0], U1[1], U1[2])
        assert qm.solve_unique(A, U1[4]) == (F(1, 9), F(4, 9), F(8, 9))
        assert qm.solve_unique(A, U1[3]) == (F(1, 3), F(2, 3), F(2, 3))

    def test_singular(self):
        with pytest.raises(SingularError):
            qm.solve_unique([[1, 2], [2, 4]], [1, 1])

    @given(st.integers(1, 4).flatmap(lambda n: st.tuples(matrices(n, n), matrices(1, n))))
    def test_substitution(self, data):
        A, (b,) = data
        if qm.det(A) == 0:
            with pytest.raises(SingularError):
                qm.solve_unique(A, b)
        else:
            assert qm.matvec(A, qm.solve_unique(A, b)) == b

    @given(square_matrices())
    def test_inverse(self, A):
        if qm.det(A) != 0:
            assert qm.matmul(A, qm.inverse(A)) == qm.identity(len(A))


class TestKernel:
    def test_examples(self):
        assert qm.kernel_basis(qm.identity(2)) == []
        K = qm.kernel_basis([[1, 1, 1]])
        assert len(K) == 2 and qm.rank(K) == 2
        assert all(qm.dot(k, (1, 1, 1)) == 0 for k in K)

    def test_six_line_relation(self):
        u = [qm.vector(v) for v in U1]
        (k,) = qm.kernel_basis(cols(qm.neg(u[0]), u[1], qm.neg(u[3]), u[5]))
        assert k == (5, 2, 21, 22)

    @given(any_matrices())
    def test_normalized_generators(self, M):
        for k in qm.kernel_basis(M):
            assert not any(qm.matvec(M, k))
            assert all(x.denominator == 1 for x in k)
            first = next(x for x in k if x != 0)
            assert first > 0
            from math import gcd
            from functools import reduce
            assert reduce(gcd, (int(x) for x in k)) == 1

    def test_normalize_integer(self):
        assert qm.normalize_integer([F(-1, 2), F(1, 3), 0]) == (3, -2, 0)


class TestProjectors:
    def test_axis(self):
        P, Q = qm.projector_pair([(1, 0, 0)])
        assert qm.matvec(P, (1, 1, 1)) == (1, 0, 0)
        assert qm.matvec(Q, (1, 1, 1)) == (0, 1, 1)

    def test_full_basis(self):
        P, Q = qm.projector_pair(qm.identity(3))
        assert P == qm.identity(3) and Q == qm.zeros(3, 3)

    def test_diagonal(self):
        P, _ = qm.projector_pair([(1, 1)])
        h = F(1, 2)
        assert P == ((h, h), (h, h))

    def test_dependent_basis(self):
        with pytest.raises(RankDeficiencyError):
            qm.projector_pair([(1, 2), (2, 4)])

    @settings(max_examples=50)
    @given(st.integers(1, 5).flatmap(lambda n: st.integers(1, n).flatmap(lambda k: matrices(k, n))))
    def test_identities(self, basis):
        if qm.rank(basis) < len(basis):
            return
        P, Q = qm.projector_pair(basis)
        n = len(basis[0])
        assert qm.mat_add(P, Q) == qm.identity(n)
        assert qm.matmul(P, P) == P and qm.matmul(Q, Q) == Q
        assert qm.transpose(P) == P
        for v in basis:
            assert qm.matvec(P, v) == v
