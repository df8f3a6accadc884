"""Graded vector spaces over Q and Koszul sign bookkeeping.

Degrees are signed integers.  Parity (for all sign purposes) is degree mod 2.
"""

from __future__ import annotations


class GradedError(ValueError):
    pass


def koszul_sign(degrees, permutation) -> int:
    """Sign picked up by reordering graded elements.

    `permutation[j]` is the index (into `degrees`) of the element placed at
    position j, so the result order reads degrees[permutation[0]],
    degrees[permutation[1]], ...  Each inversion of two odd elements
    contributes a factor -1; even elements move freely.
    """
    n = len(degrees)
    if sorted(permutation) != list(range(n)):
        raise GradedError("not a permutation of 0..%d: %r" % (n - 1, permutation))
    sign = 1
    for j in range(n):
        for i in range(j):
            if permutation[i] > permutation[j]:
                if degrees[permutation[i]] % 2 and degrees[permutation[j]] % 2:
                    sign = -sign
    return sign


class GradedSpace:
    """Finite-dimensional graded space: an ordered label basis per degree."""

    def __init__(self, labels_by_degree):
        self._labels = {}
        for k, labels in labels_by_degree.items():
            labels = tuple(str(l) for l in labels)
            if len(set(labels)) != len(labels):
                raise GradedError("duplicate labels in degree %d" % k)
            if labels:
                self._labels[int(k)] = labels

    def degrees(self):
        return sorted(self._labels)

    def dim(self, k: int) -> int:
        return len(self._labels.get(k, ()))

    def labels(self, k: int):
        return self._labels.get(k, ())

    def index(self, k: int, label: str) -> int:
        return self._labels[k].index(label)

    def total_dim(self) -> int:
        return sum(len(v) for v in self._labels.values())

    def __eq__(self, other):
        return isinstance(other, GradedSpace) and self._labels == other._labels

    def __repr__(self):
        return "GradedSpace(%r)" % {k: list(v) for k, v in sorted(self._labels.items())}

    def items(self):
        return sorted(self._labels.items())
