"""Cartan calculus: Chevalley-Eilenberg and Weil algebras of a Lie algebra.

A finite-dimensional Lie algebra over Q is given by structure constants.
Both functors produce a FreeCDGA together with contraction operators iota_a
(degree -1) and coadjoint operators theta_a (degree 0), packaged with the
differential as a CartanOps bundle whose five defining operator identities
can be verified exactly (on generators, which suffices for derivations, and
again degreewise as matrices).

Conventions, with [X_i, X_j] = sum_k c^k_ij X_k:

* Chevalley-Eilenberg: generators e^k of degree 1,
  d e^k = -(1/2) sum_ij c^k_ij e^i e^j.
* Weil: connection generators a^k (degree 1) and curvatures F^k (degree 2),
  d a^k = F^k - (1/2) sum_ij c^k_ij a^i a^j,
  d F^k = - sum_ij c^k_ij a^i F^j,
  iota_a(a^k) = delta, iota_a(F^k) = 0, theta_a = coadjoint on both rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graded import GradedError, GradedSpace
from .linalg import Mat
from .complexes import Complex, ChainMap, GradedMap, InternalCheckError
from .poly import Generators, Polynomial
from .algebra import FreeCDGA, Derivation, CDGAMorphism


class LieData:
    """Lie algebra over Q by structure constants, validated on construction."""

    def __init__(self, names, brackets):
        self.names = [str(n) for n in names]
        if len(set(self.names)) != len(self.names):
            raise GradedError("duplicate Lie basis names")
        self.n = len(self.names)
        self._c = {}
        for (i, j), combo in brackets.items():
            i, j = int(i), int(j)
            if i == j:
                for k, v in combo.items():
                    if Fraction(v):
                        raise GradedError("[x, x] must vanish")
                continue
            clean = {int(k): Fraction(v) for k, v in combo.items() if Fraction(v)}
            if not clean:
                continue
            if (j, i) in self._c:
                other = self._c[(j, i)]
                if {k: -v for k, v in other.items()} != clean:
                    raise GradedError(
                        "brackets [%d,%d] and [%d,%d] are not antisymmetric"
                        % (i, j, j, i)
                    )
                continue
            self._c[(i, j)] = clean
        self._validate_jacobi()

    def c(self, i, j, k) -> Fraction:
        if i == j:
            return Fraction(0)
        if (i, j) in self._c:
            return self._c[(i, j)].get(k, Fraction(0))
        if (j, i) in self._c:
            return -self._c[(j, i)].get(k, Fraction(0))
        return Fraction(0)

    def bracket(self, i, j):
        return {k: self.c(i, j, k) for k in range(self.n) if self.c(i, j, k)}

    def _validate_jacobi(self):
        for i in range(self.n):
            for j in range(i + 1, self.n):
                for k in range(j + 1, self.n):
                    for l in range(self.n):
                        total = Fraction(0)
                        for m in range(self.n):
                            total += self.c(i, j, m) * self.c(m, k, l)
                            total += self.c(j, k, m) * self.c(m, i, l)
                            total += self.c(k, i, m) * self.c(m, j, l)
                        if total:
                            raise GradedError(
                                "Jacobi identity fails on basis triple (%d,%d,%d)"
                                % (i, j, k)
                            )

    # -- builtins -----------------------------------------------------------

    @classmethod
    def abelian(cls, n: int) -> "LieData":
        return cls(["x%d" % (i + 1) for i in range(n)], {})

    @classmethod
    def solvable2(cls) -> "LieData":
        """The nonabelian 2-dimensional algebra: [x1, x2] = x2."""
        return cls(["x1", "x2"], {(0, 1): {1: 1}})

    @classmethod
    def cross3(cls) -> "LieData":
        """The simple 3-dimensional algebra with cyclic brackets
        [x1,x2]=x3, [x2,x3]=x1, [x3,x1]=x2."""
        return cls(
            ["x1", "x2", "x3"],
            {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}},
        )


@dataclass
class CartanOps:
    """A CDGA with contraction and coadjoint operators for each Lie direction."""

    algebra: FreeCDGA
    lie: LieData
    iota: list
    theta: list
    kind: str = "custom"

    @property
    def d(self) -> Derivation:
        return self.algebra.differential

    def verify(self):
        """Check the five operator identities exactly; returns failures.

        All operators involved are derivations, so agreement on generators
        is agreement everywhere; each identity is evaluated on every
        generator and reported by name.
        """
        failures = []
        n = self.lie.n
        gens = self.algebra.gens.names

        def images(op):
            return {g: op.image_of(g) for g in gens}

        def same(op, expected_images, label):
            for g in gens:
                if op.image_of(g) != expected_images[g]:
                    failures.append("%s fails on generator %s" % (label, g))
                    return

        zero = {g: Polynomial.zero(self.algebra.gens) for g in gens}
        for a in range(n):
            same(
                self.d.commutator(self.iota[a]),
                images(self.theta[a]),
                "[d, iota_%d] = theta_%d" % (a, a),
            )
        for a in range(n):
            for b in range(a, n):
                same(
                    self.iota[a].commutator(self.iota[b]),
                    zero,
                    "[iota_%d, iota_%d] = 0" % (a, b),
                )
        for a in range(n):
            for b in range(n):
                want = {g: Polynomial.zero(self.algebra.gens) for g in gens}
                for k in range(n):
                    coef = self.lie.c(a, b, k)
                    if coef:
                        for g in gens:
                            want[g] = want[g] + self.iota[k].image_of(g).scale(coef)
                same(
                    self.theta[a].commutator(self.iota[b]),
                    want,
                    "[theta_%d, iota_%d] = iota_[.,.]" % (a, b),
                )
        for a in range(n):
            for b in range(n):
                want = {g: Polynomial.zero(self.algebra.gens) for g in gens}
                for k in range(n):
                    coef = self.lie.c(a, b, k)
                    if coef:
                        for g in gens:
                            want[g] = want[g] + self.theta[k].image_of(g).scale(coef)
                same(
                    self.theta[a].commutator(self.theta[b]),
                    want,
                    "[theta_%d, theta_%d] = theta_[.,.]" % (a, b),
                )
        for a in range(n):
            same(
                self.theta[a].commutator(self.d),
                zero,
                "[theta_%d, d] = 0" % a,
            )
        return failures

    def verify_matrices(self, window):
        """Degreewise matrix form of the same identities on [lo, hi]."""
        lo, hi = window
        n = self.lie.n
        alg = self.algebra
        failures = []
        for k in range(lo, hi + 1):
            dk = alg.d_matrix(k)
            dkm1 = alg.d_matrix(k - 1)
            for a in range(n):
                ia_k = self.iota[a].matrix(k)
                ia_k1 = self.iota[a].matrix(k + 1)
                th = self.theta[a].matrix(k)
                if dkm1 * ia_k + ia_k1 * dk != th:
                    failures.append("matrix [d, iota_%d] != theta at degree %d" % (a, k))
                th_next = self.theta[a].matrix(k + 1)
                if th_next * dk != dk * th:
                    failures.append("matrix [theta_%d, d] != 0 at degree %d" % (a, k))
        return failures


def chevalley_eilenberg(lie: LieData, truncation: int = 8) -> CartanOps:
    """Cochains on the Lie algebra: degree-1 generators, quadratic d."""
    gens = Generators([(name, 1) for name in lie.names])
    n = lie.n
    d_images = {}
    for k in range(n):
        poly = Polynomial.zero(gens)
        for i in range(n):
            for j in range(i + 1, n):
                coef = lie.c(i, j, k)
                if coef:
                    poly = poly + Polynomial.monomial(
                        gens, [(i, 1), (j, 1)], -coef
                    )
        if not poly.is_zero():
            d_images[lie.names[k]] = poly
    algebra = FreeCDGA(gens, d_images, truncation=truncation)
    iota = []
    theta = []
    for a in range(n):
        iota.append(
            Derivation(
                algebra,
                -1,
                {lie.names[a]: Polynomial.one(gens)},
            )
        )
        images = {}
        for k in range(n):
            poly = Polynomial.zero(gens)
            for b in range(n):
                coef = lie.c(a, b, k)
                if coef:
                    poly = poly + Polynomial.monomial(gens, [(b, 1)], -coef)
            if not poly.is_zero():
                images[lie.names[k]] = poly
        theta.append(Derivation(algebra, 0, images))
    return CartanOps(algebra=algebra, lie=lie, iota=iota, theta=theta, kind="ce")


def weil_algebra(lie: LieData, truncation: int = 8) -> CartanOps:
    """Connection-curvature model: acyclic carrier of the Cartan operators."""
    n = lie.n
    names_a = ["a%d" % (i + 1) for i in range(n)]
    names_f = ["F%d" % (i + 1) for i in range(n)]
    gens = Generators(
        [(nm, 1) for nm in names_a] + [(nm, 2) for nm in names_f]
    )
    d_images = {}
    for k in range(n):
        poly = Polynomial.generator(gens, names_f[k])
        for i in range(n):
            for j in range(i + 1, n):
                coef = lie.c(i, j, k)
                if coef:
                    poly = poly + Polynomial.monomial(gens, [(i, 1), (j, 1)], -coef)
        d_images[names_a[k]] = poly
        fpoly = Polynomial.zero(gens)
        for i in range(n):
            for j in range(n):
                coef = lie.c(i, j, k)
                if coef:
                    fpoly = fpoly + Polynomial.monomial(
                        gens, [(i, 1), (n + j, 1)], -coef
                    )
        if not fpoly.is_zero():
            d_images[names_f[k]] = fpoly
    algebra = FreeCDGA(gens, d_images, truncation=truncation)
    iota = []
    theta = []
    for a in range(n):
        iota.append(
            Derivation(algebra, -1, {names_a[a]: Polynomial.one(gens)})
        )
        images = {}
        for k in range(n):
            pa = Polynomial.zero(gens)
            pf = Polynomial.zero(gens)
            for b in range(n):
                coef = lie.c(a, b, k)
                if coef:
                    pa = pa + Polynomial.monomial(gens, [(b, 1)], -coef)
                    pf = pf + Polynomial.monomial(gens, [(n + b, 1)], -coef)
            if not pa.is_zero():
                images[names_a[k]] = pa
            if not pf.is_zero():
                images[names_f[k]] = pf
        theta.append(Derivation(algebra, 0, images))
    return CartanOps(algebra=algebra, lie=lie, iota=iota, theta=theta, kind="weil")


def weil_contraction_witness(ops: CartanOps):
    """Odd derivation K with K(a) = 0, K(F^k) = a^k.

    Against the linear part of the Weil differential (a -> F, F -> 0) its
    anticommutator is the generator-length operator, which exhibits the
    Weil algebra as contractible onto Q in positive degrees.
    """
    if ops.kind != "weil":
        raise GradedError("contraction witness is specific to the Weil model")
    n = ops.lie.n
    alg = ops.algebra
    images_k = {}
    images_lin = {}
    for i in range(n):
        a_name = alg.gens.names[i]
        f_name = alg.gens.names[n + i]
        images_k[f_name] = alg.gen(a_name)
        images_lin[a_name] = alg.gen(f_name)
    K = Derivation(alg, -1, images_k)
    d_lin = Derivation(alg, 1, images_lin)
    return K, d_lin


def length_operator(algebra: FreeCDGA) -> "Derivation":
    """Degree-0 derivation acting as (number of generator factors)."""
    return Derivation(
        algebra,
        0,
        {name: algebra.gen(name) for name in algebra.gens.names},
    )


# -- basic subcomplex -----------------------------------------------------------------


@dataclass
class BasicComplexData:
    complex: Complex
    inclusion: ChainMap
    ambient: Complex


def basic_subcomplex(ops: CartanOps, window) -> BasicComplexData:
    """Joint kernel of all iota_a and theta_a, with its induced differential.

    Computed degreewise on [lo, hi+1] so the differential is available on
    all of [lo, hi]; closure of the kernel under d is verified exactly.
    """
    lo, hi = window
    alg = ops.algebra
    n = ops.lie.n
    bases = {}
    for k in range(lo, hi + 2):
        dim = alg.dim(k)
        if dim == 0:
            bases[k] = []
            continue
        rows = []
        for a in range(n):
            mat = ops.iota[a].matrix(k)
            rows.extend(mat.rows)
            mat = ops.theta[a].matrix(k)
            rows.extend(mat.rows)
        if rows:
            stacked = Mat(len(rows), dim, rows)
            bases[k] = stacked.nullspace()
        else:
            bases[k] = [
                [Fraction(1 if i == j else 0) for j in range(dim)]
                for i in range(dim)
            ]
    labels = {}
    mats = {}
    for k in range(lo, hi + 2):
        if bases[k]:
            labels[k] = tuple("b%d_%d" % (k, i) for i in range(len(bases[k])))
            dim = alg.dim(k)
            mats[k] = Mat(
                dim,
                len(bases[k]),
                [[bases[k][j][i] for j in range(len(bases[k]))] for i in range(dim)],
            )
    diffs = {}
    for k in range(lo, hi + 1):
        if not bases[k] or not bases.get(k + 1):
            continue
        image = alg.d_matrix(k) * mats[k]
        sol = mats[k + 1].solve_matrix(image)
        if sol is None:
            raise InternalCheckError(
                "basic subspace is not closed under d at degree %d" % k
            )
        if not sol.is_zero():
            diffs[k] = sol
    basic = Complex(GradedSpace(labels), diffs, validate=True)
    ambient = alg.to_complex(window=(lo, hi + 1))
    inclusion = ChainMap(
        basic,
        ambient,
        {k: mats[k] for k in mats},
    )
    return BasicComplexData(complex=basic, inclusion=inclusion, ambient=ambient)


# -- classifying maps ----------------------------------------------------------------


@dataclass
class ClassifyingMapReport:
    morphism: CDGAMorphism
    curvatures: list
    flat: bool
    theta_equivariant: bool
    failures: list


def classifying_map(weil_ops: CartanOps, target_ops: CartanOps,
                    connection) -> ClassifyingMapReport:
    """Algebra map out of the Weil model induced by a connection.

    `connection` lists, per Lie direction k, a degree-1 element A_k of the
    target with iota_i(A_k) = delta_ik; the map sends a^k to A_k and F^k to
    the curvature d A_k + (1/2) sum c^k_ij A_i A_j.  A connection failing
    the contraction condition is rejected with the failing pair; theta-
    equivariance of the result is verified and reported.
    """
    if weil_ops.kind != "weil":
        raise GradedError("classifying maps start from the Weil model")
    lie = weil_ops.lie
    n = lie.n
    tgt = target_ops.algebra
    if len(connection) != n:
        raise GradedError(
            "connection must list %d degree-1 elements" % n
        )
    for k, A in enumerate(connection):
        if not A.is_zero() and A.is_homogeneous() != 1:
            raise GradedError("connection entry %d is not of degree 1" % k)
    one = Polynomial.one(tgt.gens)
    for i in range(n):
        for k in range(n):
            got = target_ops.iota[i].apply(connection[k])
            want = one if i == k else Polynomial.zero(tgt.gens)
            if got != want:
                raise GradedError(
                    "not a connection: iota_%d applied to entry %d gives %s"
                    % (i, k, got)
                )
    curvatures = []
    for k in range(n):
        F = tgt.d(connection[k])
        for i in range(n):
            for j in range(i + 1, n):
                coef = lie.c(i, j, k)
                if coef:
                    F = F + (connection[i] * connection[j]).scale(coef)
        curvatures.append(F)
    images = {}
    for k in range(n):
        images[weil_ops.algebra.gens.names[k]] = connection[k]
        images[weil_ops.algebra.gens.names[n + k]] = curvatures[k]
    morphism = CDGAMorphism(weil_ops.algebra, tgt, images, validate=True)
    failures = []
    for i in range(n):
        for k in range(n):
            lhs = target_ops.iota[i].apply(curvatures[k])
            if not lhs.is_zero():
                failures.append(
                    "iota_%d of curvature %d is nonzero" % (i, k)
                )
            got = target_ops.theta[i].apply(connection[k])
            want = Polynomial.zero(tgt.gens)
            for b in range(n):
                coef = lie.c(i, b, k)
                if coef:
                    want = want + connection[b].scale(-coef)
            if got != want:
                failures.append(
                    "theta_%d equivariance fails on connection entry %d" % (i, k)
                )
    flat = all(F.is_zero() for F in curvatures)
    return ClassifyingMapReport(
        morphism=morphism,
        curvatures=curvatures,
        flat=flat,
        theta_equivariant=not failures,
        failures=failures,
    )


def weil_to_ce_projection(weil_ops: CartanOps, ce_ops: CartanOps) -> ClassifyingMapReport:
    """The flat Maurer-Cartan connection A_k = e^k on the Lie cochains."""
    connection = [ce_ops.algebra.gen(name) for name in ce_ops.lie.names]
    return classifying_map(weil_ops, ce_ops, connection)


# -- integration of a flow -------------------------------------------------------------


@dataclass
class IntegratedHomotopyReport:
    ok: bool
    window: tuple
    homotopy: dict
    exp_theta: dict
    nilpotency_index: dict
    factorization_checked: bool


def integrate_homotopy(ops: CartanOps, coefficients, window) -> IntegratedHomotopyReport:
    """Exact integration of the flow of theta_X for X = sum c_a X_a.

    Requires theta_X nilpotent degreewise (else the exponential leaves Q and
    the input is rejected).  Returns h with d h + h d = id - exp(theta_X),
    built from h = -sum_{m>=1} (iota_X d)^{m-1} iota_X / m!, and verifies
    both that identity and the factorization
    exp(d iota_X) exp(iota_X d) = exp(d iota_X) + exp(iota_X d) - id
    entrywise on the window.
    """
    lo, hi = window
    alg = ops.algebra
    n = ops.lie.n
    if isinstance(coefficients, dict):
        sparse = coefficients
        coefficients = [Fraction(0)] * n
        for a, c in sparse.items():
            coefficients[a] = Fraction(c)
    else:
        coefficients = [Fraction(c) for c in coefficients]
    if len(coefficients) != n:
        raise GradedError("flow needs %d coefficients" % n)
    iota_images = {}
    for g in alg.gens.names:
        img = Polynomial.zero(alg.gens)
        for a in range(n):
            if coefficients[a]:
                img = img + ops.iota[a].image_of(g).scale(coefficients[a])
        if not img.is_zero():
            iota_images[g] = img
    iota_x = Derivation(alg, -1, iota_images)

    def matpow_series(T, dim):
        """(nilpotency index, exp(T)) for a nilpotent matrix, or (None, None)."""
        if dim == 0:
            return 1, Mat.eye(0)
        acc = Mat.eye(dim)
        total = Mat.eye(dim)
        fact = 1
        for m in range(1, dim + 1):
            acc = acc * T
            fact *= m
            if acc.is_zero():
                return m, total
            total = total + acc.scale(Fraction(1, fact))
        return None, None

    homotopy = {}
    exp_theta = {}
    nilp = {}
    mats_di = {}
    mats_id = {}
    for k in range(lo, hi + 2):
        dim = alg.dim(k)
        A = alg.d_matrix(k - 1) * iota_x.matrix(k)   # d iota at degree k
        B = iota_x.matrix(k + 1) * alg.d_matrix(k)   # iota d at degree k
        T = A + B
        idx, E = matpow_series(T, dim)
        if idx is None:
            raise GradedError(
                "theta of the flow is not nilpotent at degree %d; "
                "cannot integrate over Q" % k
            )
        nilp[k] = idx
        exp_theta[k] = E
        mats_di[k] = A
        mats_id[k] = B
    for k in range(lo, hi + 2):
        # h_k = -sum_{m>=1} (iota d)^(m-1) iota / m!, valued in degree k-1;
        # (iota d) acts on degree k-1, so powers multiply on the left.
        dim = alg.dim(k)
        ik = iota_x.matrix(k)
        iota_d_below = iota_x.matrix(k) * alg.d_matrix(k - 1)
        h = Mat.zero(alg.dim(k - 1), dim)
        left = Mat.eye(alg.dim(k - 1))
        fact = 1
        for m in range(1, alg.dim(k - 1) + 2):
            fact *= m
            h = h + (left * ik).scale(Fraction(-1, fact))
            left = left * iota_d_below
            if left.is_zero():
                break
        if not left.is_zero():
            raise GradedError(
                "flow is not nilpotent below degree %d; cannot integrate" % k
            )
        homotopy[k] = h
    ok = True
    for k in range(lo, hi + 1):
        dim = alg.dim(k)
        lhs = alg.d_matrix(k - 1) * homotopy[k] + homotopy[k + 1] * alg.d_matrix(k)
        rhs = Mat.eye(dim) - exp_theta[k]
        if lhs != rhs:
            raise InternalCheckError(
                "integrated homotopy identity fails at degree %d" % k
            )
        A, B = mats_di[k], mats_id[k]
        if not (A * B).is_zero() or not (B * A).is_zero():
            raise InternalCheckError(
                "flow components fail to annihilate each other at degree %d" % k
            )
        _, eA = matpow_series(A, dim)
        _, eB = matpow_series(B, dim)
        if eA * eB != eA + eB - Mat.eye(dim):
            raise InternalCheckError(
                "exponential factorization fails at degree %d" % k
            )
    return IntegratedHomotopyReport(
        ok=ok,
        window=(lo, hi),
        homotopy={k: homotopy[k] for k in range(lo, hi + 1)},
        exp_theta={k: exp_theta[k] for k in range(lo, hi + 1)},
        nilpotency_index={k: nilp[k] for k in range(lo, hi + 1)},
        factorization_checked=True,
    )
