from fractions import Fraction as F

import pytest

from cdga import Mat, SparseEliminator, block_matrix

from helpers import oracle_rank, mat_rows, random_unimodular
import random


def test_construction_and_indexing():
    m = Mat.zero(2, 3)
    assert (m.m, m.n) == (2, 3)
    m[(1, 2)] = F(5)
    assert m[(1, 2)] == 5
    e = Mat.eye(3)
    assert e * e == e
    r = Mat.from_rows([[1, 2], [3, 4]])
    assert r[(1, 0)] == 3


def test_arithmetic():
    a = Mat.from_rows([[1, 2], [3, 4]])
    b = Mat.from_rows([[0, 1], [1, 0]])
    assert a + b - b == a
    assert (a.scale(F(1, 2)))[(0, 1)] == 1
    assert (a * b) == Mat.from_rows([[2, 1], [4, 3]])
    assert a.apply([F(1), F(0)]) == [F(1), F(3)]
    assert a.transpose()[(0, 1)] == 3
    assert (-a + a).is_zero()


def test_rank_rref_nullspace_solve():
    a = Mat.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert a.rank() == 2
    _, pivots = a.rref()
    assert pivots == [0, 1]
    ns = a.nullspace()
    assert len(ns) == 1
    v = ns[0]
    assert a.apply(v) == [F(0)] * 3
    b = [F(6), F(12), F(2)]
    x = a.solve(b)
    assert x is not None and a.apply(x) == b
    assert a.solve([F(1), F(0), F(0)]) is None


def test_inverse_and_det():
    a = Mat.from_rows([[2, 1], [1, 1]])
    assert a.inv() * a == Mat.eye(2)
    assert a.det() == 1
    assert Mat.from_rows([[1, 2], [2, 4]]).det() == 0
    with pytest.raises(ValueError):
        Mat.from_rows([[1, 2], [2, 4]]).inv()
    assert Mat.eye(0).det() == 1
    assert Mat.eye(0).inv() == Mat.eye(0)


def test_rank_matches_oracle_on_random_matrices():
    rng = random.Random(7)
    for _ in range(100):
        m = rng.randint(0, 5)
        n = rng.randint(0, 5)
        a = Mat.zero(m, n)
        for i in range(m):
            for j in range(n):
                a[(i, j)] = F(rng.randint(-3, 3), rng.randint(1, 3))
        assert a.rank() == oracle_rank(mat_rows(a))


def test_block_matrix():
    a = Mat.eye(2)
    b = Mat.from_rows([[7]])
    m = block_matrix([[a, None], [None, b]], [2, 1], [2, 1])
    assert m[(0, 0)] == 1 and m[(2, 2)] == 7 and m[(0, 2)] == 0


def test_hstack_vstack():
    a = Mat.eye(2)
    b = Mat.zero(2, 1)
    assert a.hstack(b).n == 3
    assert a.vstack(Mat.zero(1, 2)).m == 3


def test_unimodular_has_unit_determinant():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(1, 5)
        assert random_unimodular(rng, n).det() == 1


def test_sparse_eliminator_express():
    e = SparseEliminator()
    assert e.add({"x": F(1)}, "first") == "first"
    assert e.add({"x": F(2)}, "dup") is None  # dependent, not inserted
    assert e.add({"y": F(1), "x": F(1)}, "second") == "second"
    combo = e.express({"x": F(3), "y": F(1)})
    assert combo is not None
    got = {}
    for tag, coeff in combo.items():
        got[tag] = coeff
    assert got == {"first": F(2), "second": F(1)}
    assert e.express({"z": F(1)}) is None
    assert e.rank == 2
