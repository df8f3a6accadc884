"""Minimal models of simply connected free CDGAs, one degree at a time.

Starting from the trivial algebra, stage k first adjoins closed generators
hitting a basis of coker(H^k(model) -> H^k(input)), then generators whose
differentials kill ker(H^(k+1)(model) -> H^(k+1)(input)); the comparison
map extends at every step.  After stage k the induced map on cohomology is
an isomorphism through degree k and injective at k+1, so generator counts
in degrees <= n are final once stages 2..n have run.  The finished map is
re-certified as a weak equivalence by the two-route check on the window
where the truncated complexes are trustworthy.

The rank of the degree-k generator space of a minimal model is the rank of
the k-th rational homotopy group of the geometric realization, which is
what `homotopy_table` reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graded import GradedError
from .linalg import Mat
from .complexes import (
    ChainMap,
    HomologySpace,
    InternalCheckError,
    induced_on_homology,
    is_weak_equivalence,
)
from .poly import Generators, Polynomial
from .algebra import FreeCDGA, CDGAMorphism


@dataclass
class StageRecord:
    degree: int
    closed_generators: list
    closing_generators: list


@dataclass
class MinimalModel:
    model: FreeCDGA
    morphism: CDGAMorphism
    input_algebra: FreeCDGA
    truncation: int
    certified_through: int
    stages: list
    already_minimal: bool = False
    certificate: object = field(default=None, repr=False)

    def homotopy_ranks(self):
        """rank of pi_k for 2 <= k <= certified_through (zeros included)."""
        counts = {k: 0 for k in range(2, self.certified_through + 1)}
        for d in self.model.gens.degrees:
            if 2 <= d <= self.certified_through:
                counts[d] += 1
        return counts


def homotopy_table(mm: MinimalModel):
    return mm.homotopy_ranks()


def _comparison_chain_map(model: FreeCDGA, rho: CDGAMorphism, target: FreeCDGA,
                          hi: int) -> ChainMap:
    cm = model.to_complex((0, hi))
    ca = target.to_complex((0, hi))
    comps = {k: rho.matrix(k) for k in range(0, hi + 1)}
    return ChainMap(cm, ca, comps)


def minimal_model(a: FreeCDGA, truncation: int = None) -> MinimalModel:
    """Minimal Sullivan model of a simply connected free CDGA.

    Stages run for 2 <= k <= n where n is the truncation; homotopy ranks
    are certified through n - 1 by the final weak-equivalence check.
    """
    n = a.truncation if truncation is None else int(truncation)
    if n < 2:
        raise GradedError("truncation must be at least 2")
    margin = n + 2

    # simple connectivity of the input cohomology
    probe = a.to_complex((0, 3))
    h0 = HomologySpace(probe, 0)
    h1 = HomologySpace(probe, 1)
    if h0.betti != 1:
        raise GradedError(
            "input is not connected: H^0 has rank %d" % h0.betti
        )
    if h1.betti != 0:
        raise GradedError(
            "input is not simply connected: H^1 has rank %d" % h1.betti
        )

    if a.is_minimal() and a.is_simply_connected():
        mm = MinimalModel(
            model=a,
            morphism=CDGAMorphism.identity(a),
            input_algebra=a,
            truncation=n,
            certified_through=n - 1,
            stages=[],
            already_minimal=True,
        )
        mm.certificate = certify(mm)
        return mm

    model = FreeCDGA(Generators([]), {}, truncation=n)
    rho_images = {}
    stages = []

    for k in range(2, n + 1):
        rho = CDGAMorphism(model, a, dict(rho_images), validate=True)
        f = _comparison_chain_map(model, rho, a, margin)
        hm_k = HomologySpace(f.source, k)
        ha_k = HomologySpace(f.target, k)
        induced = induced_on_homology(f, k, hm_k, ha_k)

        # close the cokernel at degree k
        closed_names = []
        if ha_k.betti:
            width = induced.n
            probe_mat = induced.hstack(Mat.eye(ha_k.betti))
            _, pivots = probe_mat.rref()
            missing = [j - width for j in pivots if j >= width]
            new_gens = []
            new_images = {}
            start = 0
            for idx in missing:
                name = "v%d_%d" % (k, start)
                start += 1
                new_gens.append((name, k))
                rep = ha_k.representatives[idx]
                new_images[name] = a.from_vector(k, rep)
                closed_names.append(name)
            if new_gens:
                model = model.extended(new_gens, {})
                rho_images.update(new_images)

        # kill the kernel at degree k + 1
        rho = CDGAMorphism(model, a, dict(rho_images), validate=True)
        f = _comparison_chain_map(model, rho, a, margin)
        hm_k1 = HomologySpace(f.source, k + 1)
        ha_k1 = HomologySpace(f.target, k + 1)
        induced = induced_on_homology(f, k + 1, hm_k1, ha_k1)
        kernel = induced.nullspace()
        closing_names = []
        if kernel:
            new_gens = []
            new_d = {}
            new_images = {}
            start = len(closed_names)
            for u in kernel:
                name = "v%d_%d" % (k, start)
                start += 1
                new_gens.append((name, k))
                z_vec = [Fraction(0)] * f.source.dim(k + 1)
                for i, coeff in enumerate(u):
                    if coeff:
                        rep = hm_k1.representatives[i]
                        for r in range(len(z_vec)):
                            z_vec[r] += coeff * rep[r]
                z_poly = model.from_vector(k + 1, z_vec)
                new_d[name] = z_poly
                target_vec = a.vector(rho.apply(z_poly), k + 1)
                sol = a.d_matrix(k).solve(target_vec)
                if sol is None:
                    raise InternalCheckError(
                        "kernel class at degree %d is not a coboundary downstairs"
                        % (k + 1)
                    )
                new_images[name] = a.from_vector(k, sol)
                closing_names.append(name)
            model = model.extended(new_gens, new_d)
            rho_images.update(new_images)
        stages.append(
            StageRecord(
                degree=k,
                closed_generators=closed_names,
                closing_generators=closing_names,
            )
        )

    rho = CDGAMorphism(model, a, dict(rho_images), validate=True)
    mm = MinimalModel(
        model=model,
        morphism=rho,
        input_algebra=a,
        truncation=n,
        certified_through=n - 1,
        stages=stages,
        already_minimal=False,
    )
    if not model.is_minimal():
        raise InternalCheckError("constructed model is not minimal")
    mm.certificate = certify(mm)
    if not mm.certificate.is_equivalence:
        raise InternalCheckError(
            "constructed model failed its weak-equivalence certificate"
        )
    return mm


def certify(mm: MinimalModel):
    """Two-route weak-equivalence check of the comparison map.

    The complexes carry data through truncation + 2, so isomorphism of
    cohomology is checked on [0, n] and vanishing of the cone on [0, n-1];
    that certifies homotopy ranks through n - 1.
    """
    n = mm.truncation
    f = _comparison_chain_map(mm.model, mm.morphism, mm.input_algebra, n + 2)
    return is_weak_equivalence(f, window=(0, n))


def quadratic_part(m: FreeCDGA) -> FreeCDGA:
    """The CDGA with only the length-two component of each differential.

    For a minimal algebra the quadratic component squares to zero on its
    own (it is the lowest length-graded piece of d o d = 0), and it encodes
    the dual of the Whitehead product pairing.
    """
    images = {}
    for name in m.gens.names:
        img = m.differential.image_of(name)
        quad = {
            key: c
            for key, c in img.terms.items()
            if sum(e for _, e in key) == 2
        }
        if quad:
            images[name] = Polynomial(m.gens, quad)
    return FreeCDGA(m.gens, images, truncation=m.truncation)
