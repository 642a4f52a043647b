import itertools
import json
import random

import pytest

from wittlat.errors import NotAUnitError, RingMismatchError, ShapeError
from wittlat.matrix import (GroupShape, WittMat, elementary_matrix, identity,
                            in_group, mat_from_obj, mat_to_obj,
                            p_power_diagonal, permutation_matrix, zeros)
from wittlat.strata import sample_group
from wittlat.witt import witt_ring


def _random_mat(ring, n, rng):
    return WittMat(ring, [[ring.random(rng) for _ in range(n)] for _ in range(n)])


def _det_leibniz(A):
    # independent oracle: sum over permutations with sign
    n = A.n
    acc = A.ring.zero
    for perm in itertools.permutations(range(n)):
        term = A.ring.one
        for i in range(n):
            term = term * A.rows[i][perm[i]]
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        acc = acc - term if inv % 2 else acc + term
    return acc


def test_identity_and_add():
    R = witt_ring(3, 2)
    rng = random.Random(0)
    A = _random_mat(R, 3, rng)
    assert identity(R, 3) * A == A
    assert A + zeros(R, 3) == A
    assert (A - A) == zeros(R, 3)
    assert A.transpose().transpose() == A


def test_elementary_row_operation():
    R = witt_ring(2, 3)
    rng = random.Random(1)
    A = _random_mat(R, 3, rng)
    c = R.from_int(3)
    E = elementary_matrix(R, 3, 1, 0, c)
    B = E * A
    assert B.rows[1] == tuple(x + c * y for x, y in zip(A.rows[1], A.rows[0]))
    assert B.rows[0] == A.rows[0] and B.rows[2] == A.rows[2]
    with pytest.raises(ValueError):
        elementary_matrix(R, 3, 1, 1, c)


def test_permutation_det_matches_sign():
    R = witt_ring(2, 4)
    for perm in itertools.permutations(range(3)):
        P = permutation_matrix(R, perm)
        d = _det_leibniz(P)
        inv = sum(1 for i in range(3) for j in range(i + 1, 3) if perm[i] > perm[j])
        assert d == (R.one if inv % 2 == 0 else -R.one)
        assert P.det() == d
    with pytest.raises(ValueError):
        permutation_matrix(R, (0, 0, 1))


def test_det_examples():
    R = witt_ring(2, 3)
    assert p_power_diagonal(R, (2, 0)).det().to_int() == 4
    assert identity(R, 2).det() == R.one
    A = WittMat.from_ints(R, [[2, 1], [2, 2]])
    assert A.det().to_int() == 2
    assert A.det_digits() == ((0,), (1,), (0,))


def test_det_multiplicative_and_paths_agree():
    for p, m, N, n in [(2, 1, 3, 2), (3, 1, 3, 3), (2, 2, 2, 2), (2, 1, 4, 4)]:
        R = witt_ring(p, N, m)
        rng = random.Random(2)
        for _ in range(40):
            A, B = _random_mat(R, n, rng), _random_mat(R, n, rng)
            dA = A.det()
            assert dA == _det_leibniz(A)
            assert dA == A.det_cofactor() == A.det_elimination()
            assert (A * B).det() == dA * B.det()


def test_det_elimination_n5():
    R = witt_ring(2, 3)
    rng = random.Random(3)
    for _ in range(10):
        A = _random_mat(R, 5, rng)
        assert A.det() == _det_leibniz(A)


def test_det_invariant_under_elementary_ops():
    R = witt_ring(3, 3)
    rng = random.Random(4)
    A = _random_mat(R, 3, rng)
    for _ in range(20):
        i, j = rng.sample(range(3), 2)
        E = elementary_matrix(R, 3, i, j, R.random(rng))
        assert (E * A).det() == A.det()


def test_minor_and_corners():
    R = witt_ring(2, 5)
    A = p_power_diagonal(R, (3, 1, 0))
    assert A.corner_entry() == R.p_power(3)
    assert A.corner_minor() == R.p_power(1)
    assert A.minor(0, 0) == R.p_power(1)
    B = WittMat.from_ints(R, [[1, 2], [3, 4]])
    assert B.minor(0, 1).to_int() == 3
    assert B.minor(1, 0).to_int() == 2
    with pytest.raises(ShapeError):
        WittMat.from_ints(R, [[1]]).corner_minor()


def test_corner_minor_valuation_under_parabolic_action():
    # v_p(corner_minor(g * D * h)) >= v_p(corner_minor(D)) for g in P,
    # h in P_MINUS and diagonal D
    R = witt_ring(2, 5)
    rng = random.Random(5)
    for exps in [(4, 1, 0), (2, 2, 0), (3, 0, 0)]:
        D = p_power_diagonal(R, exps)
        base = D.corner_minor().valuation()
        for _ in range(25):
            g = sample_group(R, 3, GroupShape.P, rng)
            h = sample_group(R, 3, GroupShape.P_MINUS, rng)
            assert (g * D * h).corner_minor().valuation() >= base


def test_in_group_examples():
    R = witt_ring(2, 3)
    I = identity(R, 2)
    for shape in GroupShape:
        assert in_group(I, shape)
    assert not in_group(p_power_diagonal(R, (1, 0)), GroupShape.FULL)
    A = WittMat.from_ints(R, [[1, 1], [2, 1]])
    assert in_group(A, GroupShape.B)
    assert not in_group(A, GroupShape.B_MINUS)
    assert in_group(A, GroupShape.FULL)
    assert not in_group(A, GroupShape.P)
    P = WittMat.from_ints(R, [[3, 1], [0, 5]])
    assert in_group(P, GroupShape.P)
    assert in_group(P.transpose(), GroupShape.P_MINUS)


def test_full_group_closed_under_product_and_inverse():
    R = witt_ring(3, 3)
    rng = random.Random(6)
    for _ in range(25):
        A = sample_group(R, 2, GroupShape.FULL, rng)
        B = sample_group(R, 2, GroupShape.FULL, rng)
        assert in_group(A * B, GroupShape.FULL)
        Ainv = A.inverse()
        assert in_group(Ainv, GroupShape.FULL)
        assert A * Ainv == identity(R, 2)
        assert Ainv * A == identity(R, 2)


def test_inverse_requires_unit_det():
    R = witt_ring(2, 3)
    with pytest.raises(NotAUnitError):
        p_power_diagonal(R, (1, 0)).inverse()


def test_inverse_n3():
    R = witt_ring(5, 2)
    rng = random.Random(7)
    for _ in range(10):
        A = sample_group(R, 3, GroupShape.FULL, rng)
        assert A * A.inverse() == identity(R, 3)


def test_shape_and_ring_validation():
    R = witt_ring(2, 3)
    S = witt_ring(2, 4)
    with pytest.raises(ShapeError):
        WittMat(R, [[R.one, R.zero]])
    with pytest.raises(RingMismatchError):
        WittMat(R, [[S.one, R.zero], [R.zero, R.one]])
    A = identity(R, 2)
    with pytest.raises(ShapeError):
        A * identity(R, 3)
    with pytest.raises(RingMismatchError):
        A * identity(S, 2)


def test_json_roundtrip():
    for p, m, N, n in [(2, 1, 3, 2), (3, 2, 2, 3)]:
        R = witt_ring(p, N, m)
        rng = random.Random(8)
        A = _random_mat(R, n, rng)
        obj = mat_to_obj(A)
        assert mat_from_obj(json.loads(json.dumps(obj))) == A


def test_json_header_mismatch():
    R = witt_ring(2, 3)
    obj = mat_to_obj(identity(R, 2))
    obj["entries"][0][0]["N"] = 4
    with pytest.raises(RingMismatchError):
        mat_from_obj(obj)
