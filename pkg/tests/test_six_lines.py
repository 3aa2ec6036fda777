"""The printed relations of the two six-line systems, beyond the coefficient check."""
from fractions import Fraction as F

from arrangeo import exactmath as qm

from six_lines import U1, U2


def test_corrected_relation_nine_of_first_system():
    # exact relation on lines 1, 5, 3, 6 of the first system
    cols = qm.transpose([qm.vector(U1[i - 1]) for i in (1, 5, 3, 6)])
    assert qm.kernel_basis(cols) == [(9, 27, -10, -22)]
    lhs = qm.add(qm.scale(9, U1[0]), qm.scale(27, U1[4]))
    rhs = qm.add(qm.scale(10, U1[2]), qm.scale(22, U1[5]))
    assert lhs == rhs == (12, 12, 24)


def test_relation_fourteen_of_second_system_value():
    lhs = qm.scale(66, U2[5])
    rhs = qm.add(qm.add(qm.scale(2, U2[1]), qm.scale(21, U2[3])), qm.scale(45, U2[4]))
    assert lhs == rhs == (12, 36, 54)


def test_systems_differ_in_last_vector_only():
    assert U1[:5] == U2[:5] and U1[5] != U2[5]
    assert U2[5] == (F(2, 11), F(6, 11), F(9, 11))
