"""Shared test utilities: seeded random objects with independently known answers.

Random complexes are assembled from elementary summands whose homology is
known by construction, then conjugated by random unimodular changes of
basis; the expected Betti numbers ride along.  The rank oracle here is a
separate row-reduction written against plain lists so that the library's
linear algebra is never used to check itself.
"""

from fractions import Fraction
import random

from cdga import ChainMap, Complex, GradedSpace, Mat


# -- independent rank oracle ---------------------------------------------------------


def oracle_rank(rows):
    """Rank of a matrix given as a list of lists, by plain Gaussian elimination.

    Deliberately independent of cdga.linalg: operates on copied lists with
    partial pivoting by first nonzero entry.
    """
    rows = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    if not rows or not rows[0]:
        return 0
    ncols = len(rows[0])
    pivot_row = 0
    for col in range(ncols):
        sel = None
        for r in range(pivot_row, len(rows)):
            if rows[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        rows[pivot_row], rows[sel] = rows[sel], rows[pivot_row]
        pv = rows[pivot_row][col]
        rows[pivot_row] = [x / pv for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        rank += 1
        if pivot_row == len(rows):
            break
    return rank


def mat_rows(m):
    return [[m[(i, j)] for j in range(m.n)] for i in range(m.m)]


def oracle_betti(c):
    """Betti numbers recomputed from scratch: dim - rank(out) - rank(in)."""
    out = {}
    for k in c.support():
        din = oracle_rank(mat_rows(c.diff(k - 1)))
        dout = oracle_rank(mat_rows(c.diff(k)))
        out[k] = c.dim(k) - din - dout
    return out


# -- random complexes with known homology --------------------------------------------


def random_unimodular(rng, n):
    """Product of a random unit upper and unit lower triangular integer matrix."""
    u = Mat.eye(n)
    lo = Mat.eye(n)
    for i in range(n):
        for j in range(i + 1, n):
            u[(i, j)] = Fraction(rng.randint(-2, 2))
            lo[(j, i)] = Fraction(rng.randint(-2, 2))
    return u * lo


def random_complex(rng, max_span=6, max_dim=5, lo_range=(-2, 3)):
    """A random complex together with its Betti numbers known by construction.

    Built as a direct sum of elementary pieces - single summands (surviving
    homology) and two-term identity pieces spanning consecutive degrees
    (acyclic) - then conjugated degreewise by unimodular integer matrices.
    Returns (complex, expected_betti_dict).
    """
    lo = rng.randint(*lo_range)
    span = rng.randint(1, max_span)
    degrees = list(range(lo, lo + span))
    free = {k: rng.randint(0, 2) for k in degrees}
    pairs = {}
    for k in degrees:
        if k + 1 not in free:
            continue
        # room at k (free and incoming tails already fixed) and at k+1
        room = min(
            max_dim - free[k] - pairs.get(k - 1, 0),
            max_dim - free[k + 1],
        )
        pairs[k] = rng.randint(0, max(0, min(2, room)))
    dims = {
        k: free[k] + pairs.get(k, 0) + pairs.get(k - 1, 0) for k in degrees
    }
    labels = {
        k: ["v%d_%d" % (k, i) for i in range(dims[k])]
        for k in degrees
        if dims[k] > 0
    }
    space = GradedSpace(labels)
    # standard-basis differential: at degree k the basis is ordered as
    # [free gens | pair heads (going to k+1) | pair tails (arrived from k-1)]
    diffs = {}
    for k in degrees:
        if k + 1 not in dims or dims[k] == 0 or dims[k + 1] == 0:
            continue
        d = Mat.zero(dims[k + 1], dims[k])
        heads_start = free[k]
        tails_start = free[k + 1] + pairs.get(k + 1, 0)
        for i in range(pairs.get(k, 0)):
            d[(tails_start + i, heads_start + i)] = Fraction(1)
        if not d.is_zero():
            diffs[k] = d
    base = Complex(space, diffs)
    # conjugate by unimodular matrices degreewise
    P = {k: random_unimodular(rng, dims[k]) for k in degrees if dims.get(k, 0)}
    Pinv = {k: P[k].inv() for k in P}
    new_diffs = {}
    for k, d in diffs.items():
        new_diffs[k] = P[k + 1] * d * Pinv[k]
    twisted = Complex(space, new_diffs)
    expected = {k: free[k] for k in degrees if dims.get(k, 0)}
    return twisted, expected


def random_chain_map(rng, a, b):
    """A random chain map a -> b sampled from the full solution space.

    The chain condition is linear in the entries of the components, so the
    solution space is the nullspace of the stacked constraint matrix; a
    random rational combination of that basis is returned.
    """
    degrees = sorted(set(a.support()) | set(b.support()))
    if not degrees:
        return ChainMap(a, b, {})
    ks = list(range(min(degrees) - 1, max(degrees) + 2))
    offsets = {}
    total = 0
    for k in ks:
        offsets[k] = total
        total += b.dim(k) * a.dim(k)
    if total == 0:
        return ChainMap(a, b, {})

    def var(k, i, j):
        return offsets[k] + i * a.dim(k) + j

    constraints = []
    for k in ks[:-1]:
        # d_b f_k - f_{k+1} d_a = 0, an equation in degree k+1 x a.dim(k)
        db = b.diff(k)
        da = a.diff(k)
        for r in range(b.dim(k + 1)):
            for cdx in range(a.dim(k)):
                row = [Fraction(0)] * total
                for s in range(b.dim(k)):
                    if db[(r, s)]:
                        row[var(k, s, cdx)] += db[(r, s)]
                for s in range(a.dim(k + 1)):
                    if da[(s, cdx)]:
                        row[var(k + 1, r, s)] -= da[(s, cdx)]
                if any(row):
                    constraints.append(row)
    if constraints:
        basis = Mat.from_rows(constraints).nullspace()
    else:
        basis = [
            [Fraction(1 if i == j else 0) for i in range(total)]
            for j in range(total)
        ]
    sol = [Fraction(0)] * total
    for vec in basis:
        w = Fraction(rng.randint(-3, 3))
        if w:
            sol = [x + w * y for x, y in zip(sol, vec)]
    comps = {}
    for k in ks:
        if b.dim(k) == 0 or a.dim(k) == 0:
            continue
        mat = Mat.zero(b.dim(k), a.dim(k))
        nonzero = False
        for i in range(b.dim(k)):
            for j in range(a.dim(k)):
                v = sol[var(k, i, j)]
                if v:
                    mat[(i, j)] = v
                    nonzero = True
        if nonzero:
            comps[k] = mat
    return ChainMap(a, b, comps)


def random_posdef_gram(rng, n):
    """M^T M plus a positive diagonal: symmetric positive definite."""
    m = Mat.zero(n, n)
    for i in range(n):
        for j in range(n):
            m[(i, j)] = Fraction(rng.randint(-2, 2))
    g = m.transpose() * m
    for i in range(n):
        g[(i, i)] = g[(i, i)] + Fraction(rng.randint(1, 3))
    return g
