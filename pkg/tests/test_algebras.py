import numpy as np
import pytest

from algebras import (APOLAR_QUADRICS_IV_B, MultTable, QuadricSpace, apolar_annihilator,
                      classify_algebra, hilbert_vector, ideal_generators, ideal_quadrics,
                      quotient_algebra, recover_net, structure_constants,
                      truncated_polynomial_table)
from errors import (CharacteristicObstruction, NotLocal, NotType33, SingularMatrix,
                    WrongHilbert)
from forms import form_from_terms
from net_orbits import SINGULAR_LABELS, OrbitLabel, random_net, representatives

P = 5

# unitriangular apart from one entry below the diagonal; row 0 stays the unit
BASIS_CHANGE = np.eye(7, dtype=np.int64)
BASIS_CHANGE[1, 2] = 1
BASIS_CHANGE[2, 4] = 3
BASIS_CHANGE[3, 0] = 1


def test_annihilators_match_the_printed_ideals():
    for label, W in representatives(P).items():
        annihilator = apolar_annihilator(W)
        assert annihilator.dim == 3
        if label is OrbitLabel.IV_b:
            assert annihilator != ideal_quadrics(label, P)
            assert annihilator == QuadricSpace.from_terms(APOLAR_QUADRICS_IV_B, P)
        else:
            assert annihilator == ideal_quadrics(label, P), label


def test_quadric_space_repr():
    space = QuadricSpace.from_terms([{'xy': 1}, {'xy': 2, 'zz': 1}], P)
    assert space.dim == 2
    assert repr(space) == 'span{x*y, z^2}'


@pytest.mark.parametrize('label', SINGULAR_LABELS, ids=lambda l: l.value)
def test_structure_constants_round_trip(label):
    W = representatives(P)[label]
    T = structure_constants(W)
    assert T.check_axioms() == []
    assert hilbert_vector(T) == (3, 3)
    assert recover_net(T) == W
    assert classify_algebra(T) is label


def test_round_trip_on_random_nets():
    for seed in range(5):
        W = random_net([seed, 11], P)
        assert recover_net(structure_constants(W)) == W


@pytest.mark.parametrize('label', SINGULAR_LABELS, ids=lambda l: l.value)
def test_classification_survives_a_non_graded_basis(label):
    T = structure_constants(representatives(P)[label]).change_basis(BASIS_CHANGE)
    assert T.check_axioms() == []
    assert hilbert_vector(T) == (3, 3)
    assert classify_algebra(T) is label


@pytest.mark.parametrize('label', [l for l in SINGULAR_LABELS if l is not OrbitLabel.IV_b],
                         ids=lambda l: l.value)
def test_quotients_of_the_printed_ideals(label):
    T = quotient_algebra(ideal_generators(label, P))
    assert hilbert_vector(T) == (3, 3)
    assert classify_algebra(T) is label


def test_truncated_ideal_is_noted():
    T = quotient_algebra(ideal_generators(OrbitLabel.I_b, P))
    assert len(T.notes) == 1
    assert 'x*z^2' in T.notes[0] and 'y*z^2' in T.notes[0]
    assert quotient_algebra(ideal_generators(OrbitLabel.IV_a, P)).notes == ()
    with pytest.raises(WrongHilbert):
        quotient_algebra(ideal_generators(OrbitLabel.I_b, P), strict=True)


def test_quotient_rejects_the_wrong_degree_two_piece():
    with pytest.raises(WrongHilbert):
        quotient_algebra([form_from_terms({'x': 1}, P), form_from_terms({'yy': 1}, P)])
    with pytest.raises(WrongHilbert):
        quotient_algebra([form_from_terms({'xy': 1}, P), form_from_terms({'yy': 1}, P)])


def test_truncated_polynomial_ring():
    T = truncated_polynomial_table(4, P)
    assert T.check_axioms() == []
    assert hilbert_vector(T) == (1, 1, 1)
    assert [int(c) for c in T.multiply([0, 1, 0, 0], [0, 0, 1, 0])] == [0, 0, 0, 1]
    with pytest.raises(NotType33):
        recover_net(T)


def test_characteristic_obstruction():
    with pytest.raises(CharacteristicObstruction):
        hilbert_vector(truncated_polynomial_table(5, 5))
    with pytest.raises(CharacteristicObstruction):
        classify_algebra(structure_constants(representatives(7)[OrbitLabel.II]))


def test_non_local_tables():
    # F_p × F_p on (1, e) with e² = e
    C = np.zeros((2, 2, 2), dtype=np.int64)
    C[0] = np.eye(2, dtype=np.int64)
    C[:, 0] = np.eye(2, dtype=np.int64)
    C[1, 1, 1] = 1
    with pytest.raises(NotLocal):
        hilbert_vector(MultTable.from_ints(C, P))

    C = structure_constants(representatives(P)[OrbitLabel.IV_a]).to_ints().copy()
    C[1, 2, 4] = (C[1, 2, 4] + 1) % P
    T = MultTable.from_ints(C, P)
    assert 'commutativity' in T.check_axioms()
    with pytest.raises(NotLocal):
        hilbert_vector(T)


def test_change_basis_validation():
    T = structure_constants(representatives(P)[OrbitLabel.V])
    with pytest.raises(SingularMatrix):
        T.change_basis(np.zeros((7, 7), dtype=np.int64))
    P_ = np.eye(7, dtype=np.int64)
    P_[0, 1] = 1
    with pytest.raises(ValueError):
        T.change_basis(P_)


def test_left_multiplication():
    T = truncated_polynomial_table(3, P)
    L = T.left_multiplication(1)
    # x·1 = x, x·x = x², x·x² = 0
    assert [[int(v) for v in row] for row in L] == [[0, 0, 0], [1, 0, 0], [0, 1, 0]]
