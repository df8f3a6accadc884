import pytest

from cdga import GradedError, GradedSpace, koszul_sign


def test_koszul_sign_basics():
    # swapping two odd elements flips the sign
    assert koszul_sign([1, 1], [1, 0]) == -1
    # swapping odd past even costs nothing
    assert koszul_sign([1, 2], [1, 0]) == 1
    assert koszul_sign([2, 1], [1, 0]) == 1
    # identity permutation
    assert koszul_sign([1, 1, 1], [0, 1, 2]) == 1
    # three odds reversed: (0 1 2) -> (2 1 0) has three odd-odd inversions
    assert koszul_sign([1, 1, 1], [2, 1, 0]) == -1
    # cycle of three odds: two transpositions
    assert koszul_sign([1, 1, 1], [1, 2, 0]) == 1


def test_koszul_sign_mixed():
    # degrees [1,2,3]: move the 3 (odd) before the 1 (odd) across the 2
    # permutation placing original index 2 first: [2,0,1]
    assert koszul_sign([1, 2, 3], [2, 0, 1]) == -1


def test_graded_space():
    sp = GradedSpace({0: ["a"], 2: ["b", "c"]})
    assert sp.degrees() == [0, 2]
    assert sp.dim(2) == 2
    assert sp.dim(1) == 0
    assert sp.labels(2) == ("b", "c")
    assert sp.index(2, "c") == 1
    assert sp.total_dim() == 3
    assert sp == GradedSpace({2: ["b", "c"], 0: ["a"]})


def test_graded_space_rejects_duplicates():
    with pytest.raises(GradedError):
        GradedSpace({0: ["a", "a"]})


def test_graded_space_rejects_unknown_label():
    sp = GradedSpace({0: ["a"]})
    with pytest.raises(ValueError):
        sp.index(0, "zz")
