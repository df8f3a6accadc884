"""Free graded-commutative differential algebras over Q.

A FreeCDGA is a free graded-commutative algebra on finitely many generators
of degree >= 1 together with a degree +1 derivation d whose square vanishes;
d is given on generators and extended by the graded Leibniz rule.  Bases per
degree are enumerated monomials, so every operator has an exact matrix and
the whole algebra restricts to a cochain complex through any window.
"""

from __future__ import annotations

from fractions import Fraction

from .graded import GradedError, GradedSpace
from .linalg import Mat
from .complexes import Complex
from .poly import (
    Generators,
    Polynomial,
    basis_keys,
    key_degree,
    render_key,
)


class Derivation:
    """Degree-r derivation of a free graded-commutative algebra.

    Determined by generator images (homogeneous of degree |g| + r, or zero)
    and extended by D(ab) = D(a) b + (-1)^(r |a|) a D(b).
    """

    def __init__(self, algebra: "FreeCDGA", degree: int, images):
        self.algebra = algebra
        self.degree = int(degree)
        self.images = {}
        for name, poly in images.items():
            i = algebra.gens.index(name)
            if not isinstance(poly, Polynomial):
                raise GradedError("derivation image of %r must be a Polynomial" % name)
            if not poly.is_zero():
                got = poly.is_homogeneous()
                want = algebra.gens.degrees[i] + self.degree
                if got != want:
                    raise GradedError(
                        "derivation image of %r has degree %s, expected %d"
                        % (name, got, want)
                    )
                self.images[algebra.gens.names[i]] = poly

    def image_of(self, name: str) -> Polynomial:
        return self.images.get(name, Polynomial.zero(self.algebra.gens))

    def apply_key(self, key) -> Polynomial:
        gens = self.algebra.gens
        out = Polynomial.zero(gens)
        prefix_degree = 0
        for j, (i, e) in enumerate(key):
            name = gens.names[i]
            img = self.images.get(name)
            if img is not None:
                sign = -1 if (self.degree % 2 and prefix_degree % 2) else 1
                left = list(key[:j])
                if e > 1:
                    left.append((i, e - 1))
                left_p = Polynomial.monomial(gens, left, Fraction(e * sign))
                right_p = Polynomial.monomial(gens, key[j + 1:])
                out = out + left_p * img * right_p
            prefix_degree += e * gens.degrees[i]
        return out

    def apply(self, poly: Polynomial) -> Polynomial:
        out = Polynomial.zero(self.algebra.gens)
        for key, c in poly.terms.items():
            out = out + self.apply_key(key).scale(c)
        return out

    def __call__(self, poly):
        return self.apply(poly)

    def matrix(self, k: int) -> Mat:
        """Matrix of the derivation from degree k to degree k + r."""
        a = self.algebra
        src = a.basis(k)
        tgt_index = a.basis_index(k + self.degree)
        mat = Mat.zero(len(tgt_index), len(src))
        for col, key in enumerate(src):
            img = self.apply_key(key)
            for kk, c in img.terms.items():
                mat[(tgt_index[kk], col)] = c
        return mat

    def commutator(self, other: "Derivation") -> "Derivation":
        """Graded commutator [self, other] = s o - (-1)^(rs) o s, a derivation."""
        sgn = -1 if (self.degree % 2 and other.degree % 2) else 1
        images = {}
        for name in self.algebra.gens.names:
            g = Polynomial.generator(self.algebra.gens, name)
            val = self.apply(other.apply(g)) - other.apply(self.apply(g)).scale(sgn)
            if not val.is_zero():
                images[name] = val
        return Derivation(self.algebra, self.degree + other.degree, images)


class FreeCDGA:
    """Free graded-commutative algebra with a square-zero degree +1 derivation."""

    def __init__(self, gens, d_images, truncation: int = 8, validate: bool = True):
        self.gens = gens if isinstance(gens, Generators) else Generators(gens)
        self.truncation = int(truncation)
        images = {}
        for name, poly in (d_images or {}).items():
            idx = self.gens.index(name)
            images[self.gens.names[idx]] = poly
        self.differential = Derivation(self, 1, images)
        self._basis_cache = {}
        self._index_cache = {}
        if validate:
            self.validate()

    # -- structure ---------------------------------------------------------

    def validate(self):
        for name in self.gens.names:
            dd = self.differential.apply(self.differential.image_of(name))
            if not dd.is_zero():
                raise GradedError(
                    "d o d is nonzero on generator %r: %s" % (name, dd)
                )

    def zero(self):
        return Polynomial.zero(self.gens)

    def one(self):
        return Polynomial.one(self.gens)

    def gen(self, name: str) -> Polynomial:
        return Polynomial.generator(self.gens, name)

    def d(self, poly: Polynomial) -> Polynomial:
        return self.differential.apply(poly)

    def basis(self, k: int):
        if k not in self._basis_cache:
            self._basis_cache[k] = basis_keys(self.gens, k)
        return self._basis_cache[k]

    def basis_index(self, k: int):
        if k not in self._index_cache:
            self._index_cache[k] = {
                key: i for i, key in enumerate(self.basis(k))
            }
        return self._index_cache[k]

    def dim(self, k: int) -> int:
        return len(self.basis(k))

    def vector(self, poly: Polynomial, k: int):
        """Coordinates of a homogeneous polynomial in the degree-k basis."""
        idx = self.basis_index(k)
        vec = [Fraction(0)] * len(idx)
        for key, c in poly.terms.items():
            if key_degree(self.gens, key) != k:
                raise GradedError("polynomial has a term outside degree %d" % k)
            vec[idx[key]] = c
        return vec

    def from_vector(self, k: int, vec) -> Polynomial:
        keys = self.basis(k)
        return Polynomial(
            self.gens, {keys[i]: Fraction(v) for i, v in enumerate(vec)}
        )

    def d_matrix(self, k: int) -> Mat:
        return self.differential.matrix(k)

    def to_complex(self, window=None) -> Complex:
        """Degreewise complex of the algebra on [0, n] (default truncation)."""
        lo, hi = (0, self.truncation) if window is None else window
        labels = {}
        diffs = {}
        for k in range(lo, hi + 1):
            keys = self.basis(k)
            if keys:
                labels[k] = tuple(render_key(self.gens, key) for key in keys)
        for k in range(lo, hi):
            if self.dim(k) and self.dim(k + 1):
                mat = self.d_matrix(k)
                if not mat.is_zero():
                    diffs[k] = mat
        return Complex(GradedSpace(labels), diffs, validate=False)

    def is_minimal(self) -> bool:
        """Every differential image is decomposable (length >= 2 monomials)."""
        for name in self.gens.names:
            img = self.differential.image_of(name)
            for key in img.terms:
                if sum(e for _, e in key) < 2:
                    return False
        return True

    def is_simply_connected(self) -> bool:
        return all(d >= 2 for d in self.gens.degrees)

    def extended(self, new_gens, new_d_images) -> "FreeCDGA":
        """Hirsch-style extension: append generators, keep old differentials.

        Old polynomials transfer because generator indices are stable under
        appending; the new images may use every generator.
        """
        gens2 = self.gens.extended(new_gens)
        images = {}
        for name in self.gens.names:
            img = self.differential.image_of(name)
            if not img.is_zero():
                images[name] = Polynomial(gens2, dict(img.terms))
        for name, poly in new_d_images.items():
            images[name] = Polynomial(gens2, dict(poly.terms))
        return FreeCDGA(gens2, images, truncation=self.truncation)

    def rebase(self, poly: Polynomial) -> Polynomial:
        """Reinterpret a polynomial from a prefix generator table in this one."""
        return Polynomial(self.gens, dict(poly.terms))


class CDGAMorphism:
    """Algebra map determined by generator images, compatible with d."""

    def __init__(self, source: FreeCDGA, target: FreeCDGA, images,
                 validate: bool = True):
        self.source = source
        self.target = target
        self.images = {}
        for name, poly in images.items():
            i = source.gens.index(name)
            if not poly.is_zero():
                got = poly.is_homogeneous()
                want = source.gens.degrees[i]
                if got != want:
                    raise GradedError(
                        "morphism image of %r has degree %s, expected %d"
                        % (name, got, want)
                    )
            self.images[source.gens.names[i]] = poly
        if validate and not self.is_chain_map():
            raise GradedError("generator images do not commute with d")

    @classmethod
    def identity(cls, a: FreeCDGA) -> "CDGAMorphism":
        return cls(a, a, {n: a.gen(n) for n in a.gens.names}, validate=False)

    def image_of(self, name: str) -> Polynomial:
        return self.images.get(name, Polynomial.zero(self.target.gens))

    def apply(self, poly: Polynomial) -> Polynomial:
        out = Polynomial.zero(self.target.gens)
        for key, c in poly.terms.items():
            term = Polynomial.one(self.target.gens).scale(c)
            for i, e in key:
                img = self.image_of(self.source.gens.names[i])
                for _ in range(e):
                    term = term * img
            out = out + term
        return out

    def __call__(self, poly):
        return self.apply(poly)

    def is_chain_map(self) -> bool:
        for name in self.source.gens.names:
            lhs = self.apply(self.source.differential.image_of(name))
            rhs = self.target.d(self.image_of(name))
            if lhs != rhs:
                return False
        return True

    def matrix(self, k: int) -> Mat:
        src = self.source.basis(k)
        tgt_index = self.target.basis_index(k)
        mat = Mat.zero(len(tgt_index), len(src))
        for col, key in enumerate(src):
            img = self.apply(Polynomial(self.source.gens, {key: Fraction(1)}))
            for kk, c in img.terms.items():
                mat[(tgt_index[kk], col)] = c
        return mat

    def compose(self, other: "CDGAMorphism") -> "CDGAMorphism":
        """self o other."""
        images = {
            name: self.apply(other.image_of(name))
            for name in other.source.gens.names
        }
        return CDGAMorphism(other.source, self.target, images, validate=False)
