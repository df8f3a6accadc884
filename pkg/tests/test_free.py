from fractions import Fraction as F

import pytest

from cdga import (
    AlgebraPresentation,
    ModulePresentation,
    bar_construction,
    bar_slice,
    betti_numbers,
    enveloping_dims,
    free_gc_dims,
    free_gc_dims_from_counts,
    free_graded_lie,
    is_contractible,
    tensor_algebra_dims,
)
from cdga.graded import GradedError


def test_tensor_algebra_dims_fibonacci():
    # one generator in degree 1 and one in degree 2: compositions of n
    # from parts {1, 2} are counted by Fibonacci numbers
    dims = tensor_algebra_dims([("a", 1), ("b", 2)], 8)
    assert [dims.get(k, 0) for k in range(9)] == [1, 1, 2, 3, 5, 8, 13, 21, 34]


def test_tensor_algebra_dims_single():
    dims = tensor_algebra_dims([("a", 3)], 9)
    assert [dims.get(k, 0) for k in range(10)] == [1, 0, 0, 1, 0, 0, 1, 0, 0, 1]


def test_free_gc_dims_even_and_odd():
    # odd generator: exterior, dims 1 in degrees 0 and 3
    d = free_gc_dims([("e", 3)], 8)
    assert [d.get(k, 0) for k in range(9)] == [1, 0, 0, 1, 0, 0, 0, 0, 0]
    # even generator: polynomial, dims 1 in degrees 0, 2, 4, ...
    d2 = free_gc_dims([("x", 2)], 8)
    assert [d2.get(k, 0) for k in range(9)] == [1, 0, 1, 0, 1, 0, 1, 0, 1]
    # frozen oracle for the pair
    d3 = free_gc_dims([("x", 2), ("e", 3)], 8)
    assert [d3.get(k, 0) for k in range(9)] == [1, 0, 1, 1, 1, 1, 1, 1, 1]


def test_free_gc_dims_from_counts_matches():
    gens = [("a", 1), ("b", 2), ("c", 2)]
    d1 = free_gc_dims(gens, 6)
    d2 = free_gc_dims_from_counts({1: 1, 2: 2}, 6)
    assert d1 == d2


def test_free_graded_lie_single_odd_generator():
    L = free_graded_lie([("e", 1)], 6)
    dims = L.dims()
    # e and [e, e]; triple brackets vanish by Jacobi for one odd generator
    assert [dims.get(k, 0) for k in range(1, 7)] == [1, 1, 0, 0, 0, 0]
    L.verify_axioms()


def test_free_graded_lie_two_odd_generators():
    L = free_graded_lie([("a", 1), ("b", 1)], 4)
    dims = L.dims()
    assert dims[1] == 2
    # [a,a], [a,b], [b,b]
    assert dims[2] == 3
    L.verify_axioms()


def test_free_graded_lie_single_even_generator():
    L = free_graded_lie([("x", 2)], 8)
    dims = L.dims()
    # an even generator has [x, x] = 0, and nothing else
    assert [dims.get(k, 0) for k in range(1, 9)] == [0, 1, 0, 0, 0, 0, 0, 0]
    L.verify_axioms()


def test_enveloping_dims_is_pbw():
    for gens in [[("a", 1)], [("x", 2)], [("a", 1), ("b", 1)], [("a", 1), ("x", 2)]]:
        L = free_graded_lie(gens, 6)
        assert enveloping_dims(L, 6) == tensor_algebra_dims(gens, 6)


def test_algebra_presentation_exterior():
    A = AlgebraPresentation.exterior("e", 1)
    # elements: 1 (degree 0) and e (degree 1); e*e = 0
    assert len(A.elements) == 2
    assert A.product(1, 1) == {}
    assert A.product(0, 1) == {1: F(1)}


def test_algebra_presentation_truncated_polynomial():
    A = AlgebraPresentation.truncated_polynomial("x", 2, 3)
    # 1, x, x^2, x^3; x^4 = 0
    assert len(A.elements) == 4
    assert A.product(1, 1) == {2: F(1)}
    assert A.product(1, 2) == {3: F(1)}
    assert A.product(1, 3) == {}
    assert A.product(2, 2) == {}


def test_algebra_presentation_rejects_nonassociative():
    # fabricate a non-associative product on 1, u, v:
    # u*u = v, u*v = u (then (uu)v != u(uv) style failures appear)
    with pytest.raises(GradedError):
        AlgebraPresentation(
            [("one", 0), ("u", 2), ("v", 4)],
            {(1, 1): {2: F(1)}, (1, 2): {1: F(1)}, (2, 1): {1: F(1)}, (2, 2): {}},
        )


def test_bar_slice_exterior_tor():
    # one exterior generator in degree 1, trivial module: one Tor class
    # per word length, in internal degree w at complex degree -w
    A = AlgebraPresentation.exterior("e", 1)
    triv = ModulePresentation.trivial(A)
    for w in range(1, 6):
        c = bar_slice(A, triv, w)
        assert betti_numbers(c) == {-w: 1}


def test_bar_slice_exterior_higher_degree_generator():
    # degree-3 odd generator: Tor classes at internal degrees 3w
    A = AlgebraPresentation.exterior("e", 3)
    triv = ModulePresentation.trivial(A)
    for w in range(1, 10):
        c = bar_slice(A, triv, w)
        b = betti_numbers(c)
        if w % 3 == 0:
            assert b == {-(w // 3): 1}
        else:
            assert all(v == 0 for v in b.values())


def test_bar_regular_module_is_contractible():
    A = AlgebraPresentation.truncated_polynomial("x", 2, 4)
    reg = ModulePresentation.regular(A)
    for w in range(1, 9):
        c = bar_slice(A, reg, w)
        if not c.support():
            continue
        flag, h = is_contractible(c)
        assert flag and h is not None


def test_bar_construction_dict():
    A = AlgebraPresentation.exterior("e", 1)
    triv = ModulePresentation.trivial(A)
    out = bar_construction(A, triv, 3)
    assert set(out) == {0, 1, 2, 3}
    assert betti_numbers(out[2]) == {-2: 1}


def test_truncated_polynomial_tor_pattern():
    # x^2 = 0 on an even degree-2 generator: one Tor class per word
    # length, at internal degree 2s (the divided-power pattern)
    A = AlgebraPresentation.truncated_polynomial("x", 2, 1)
    triv = ModulePresentation.trivial(A)
    for s_len in range(1, 5):
        c = bar_slice(A, triv, 2 * s_len)
        assert betti_numbers(c) == {-s_len: 1}


def test_truncated_polynomial_cubic_tor_pattern():
    # x^3 = 0: Tor classes at (s, w) generated by y (1, 2) and z (2, 6)
    A = AlgebraPresentation.truncated_polynomial("x", 2, 2)
    triv = ModulePresentation.trivial(A)
    expected = {2: {-1: 1}, 4: {}, 6: {-2: 1}, 8: {-3: 1}}
    for w, want in expected.items():
        c = bar_slice(A, triv, w)
        got = {k: v for k, v in betti_numbers(c).items() if v}
        assert got == want
