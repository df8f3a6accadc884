"""Exact linear algebra over the rationals.

Everything here works with fractions.Fraction entries; no floating point
anywhere.  Matrices are small (tens of rows) in typical use, so a dense
representation is the default.  Ranks are computed fraction-free (Bareiss)
on cleared-denominator integer copies; reduced row echelon form over
Fraction backs kernels and solving.  A sparse row-dict eliminator is
provided for long, mostly-zero vectors (tensor-word coordinates).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class Mat:
    """Dense matrix with explicit shape, so zero-dimensional edges stay sane."""

    __slots__ = ("m", "n", "rows")

    def __init__(self, m: int, n: int, rows):
        if len(rows) != m or any(len(r) != n for r in rows):
            raise ValueError("row data does not match shape (%d, %d)" % (m, n))
        self.m = m
        self.n = n
        self.rows = [[Fraction(x) for x in r] for r in rows]

    @classmethod
    def zero(cls, m: int, n: int) -> "Mat":
        return cls(m, n, [[Fraction(0)] * n for _ in range(m)])

    @classmethod
    def eye(cls, n: int) -> "Mat":
        rows = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        return cls(n, n, rows)

    @classmethod
    def from_rows(cls, rows) -> "Mat":
        m = len(rows)
        n = len(rows[0]) if m else 0
        return cls(m, n, rows)

    def copy(self) -> "Mat":
        return Mat(self.m, self.n, [r[:] for r in self.rows])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __setitem__(self, ij, v):
        i, j = ij
        self.rows[i][j] = Fraction(v)

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.m == other.m
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.m, self.n, tuple(tuple(r) for r in self.rows)))

    def __repr__(self):
        return "Mat(%d, %d, %r)" % (self.m, self.n, self.rows)

    def __add__(self, other: "Mat") -> "Mat":
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("shape mismatch in +")
        return Mat(self.m, self.n, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Mat") -> "Mat":
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("shape mismatch in -")
        return Mat(self.m, self.n, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Mat":
        return self.scale(-1)

    def scale(self, c) -> "Mat":
        c = Fraction(c)
        return Mat(self.m, self.n, [[c * a for a in r] for r in self.rows])

    def __mul__(self, other: "Mat") -> "Mat":
        if self.n != other.m:
            raise ValueError("shape mismatch in *: (%d,%d)x(%d,%d)" % (self.m, self.n, other.m, other.n))
        out = [[Fraction(0)] * other.n for _ in range(self.m)]
        for i in range(self.m):
            ri = self.rows[i]
            oi = out[i]
            for k in range(self.n):
                a = ri[k]
                if a:
                    rk = other.rows[k]
                    for j in range(other.n):
                        if rk[j]:
                            oi[j] += a * rk[j]
        return Mat(self.m, other.n, out)

    def apply(self, vec):
        """Matrix times column vector (a plain list)."""
        if len(vec) != self.n:
            raise ValueError("vector length mismatch")
        return [sum((a * v for a, v in zip(r, vec) if a and v), Fraction(0)) for r in self.rows]

    def transpose(self) -> "Mat":
        return Mat(self.n, self.m, [[self.rows[i][j] for i in range(self.m)] for j in range(self.n)])

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)

    def rank(self) -> int:
        return _bareiss_rank(self)

    def det(self) -> Fraction:
        """Determinant by fraction-free-friendly Gaussian elimination."""
        if self.m != self.n:
            raise ValueError("determinant of non-square matrix")
        n = self.n
        r = [row[:] for row in self.rows]
        sign = 1
        out = Fraction(1)
        for col in range(n):
            piv = None
            for i in range(col, n):
                if r[i][col]:
                    piv = i
                    break
            if piv is None:
                return Fraction(0)
            if piv != col:
                r[col], r[piv] = r[piv], r[col]
                sign = -sign
            p = r[col][col]
            out *= p
            for i in range(col + 1, n):
                f = r[i][col] / p
                if f:
                    r[i] = [a - f * b for a, b in zip(r[i], r[col])]
        return out * sign

    def rref(self):
        """Reduced row echelon form; returns (Mat, pivot column list)."""
        r = [row[:] for row in self.rows]
        pivots = []
        lead = 0
        for col in range(self.n):
            if lead >= self.m:
                break
            piv = None
            for i in range(lead, self.m):
                if r[i][col]:
                    piv = i
                    break
            if piv is None:
                continue
            r[lead], r[piv] = r[piv], r[lead]
            pv = r[lead][col]
            r[lead] = [x / pv for x in r[lead]]
            for i in range(self.m):
                if i != lead and r[i][col]:
                    c = r[i][col]
                    r[i] = [x - c * y for x, y in zip(r[i], r[lead])]
            pivots.append(col)
            lead += 1
        return Mat(self.m, self.n, r), pivots

    def nullspace(self):
        """Basis of ker(self) as a list of column vectors (lists of Fraction)."""
        R, pivots = self.rref()
        free = [j for j in range(self.n) if j not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.n
            v[f] = Fraction(1)
            for i, p in enumerate(pivots):
                v[p] = -R.rows[i][f]
            basis.append(v)
        return basis

    def solve(self, b):
        """One solution x of self @ x = b, or None when inconsistent."""
        X = self.solve_matrix(Mat(self.m, 1, [[x] for x in b]))
        if X is None:
            return None
        return [X.rows[i][0] for i in range(self.n)]

    def solve_matrix(self, B: "Mat"):
        """Solve self @ X = B; returns X (free coordinates zero) or None."""
        if B.m != self.m:
            raise ValueError("shape mismatch in solve")
        aug = Mat(self.m, self.n + B.n, [r + br for r, br in zip(self.rows, B.rows)])
        R, pivots = aug.rref()
        for i in range(self.m):
            if all(not R.rows[i][j] for j in range(self.n)) and any(R.rows[i][self.n + j] for j in range(B.n)):
                return None
        pivots = [p for p in pivots if p < self.n]
        X = Mat.zero(self.n, B.n)
        for i, p in enumerate(pivots):
            for j in range(B.n):
                X.rows[p][j] = R.rows[i][self.n + j]
        return X

    def inv(self) -> "Mat":
        if self.m != self.n:
            raise ValueError("inverse of non-square matrix")
        X = self.solve_matrix(Mat.eye(self.n))
        if X is None or self * X != Mat.eye(self.n):
            raise ValueError("matrix is singular")
        return X

    def column_space_rank(self) -> int:
        return self.rank()

    def hstack(self, other: "Mat") -> "Mat":
        if self.m != other.m:
            raise ValueError("hstack row mismatch")
        return Mat(self.m, self.n + other.n, [r + s for r, s in zip(self.rows, other.rows)])

    def vstack(self, other: "Mat") -> "Mat":
        if self.n != other.n:
            raise ValueError("vstack column mismatch")
        return Mat(self.m + other.m, self.n, [r[:] for r in self.rows] + [r[:] for r in other.rows])


def block_matrix(blocks, row_dims, col_dims) -> Mat:
    """Assemble a matrix from a grid of blocks; None means a zero block."""
    m = sum(row_dims)
    n = sum(col_dims)
    out = Mat.zero(m, n)
    i0 = 0
    for bi, rdim in enumerate(row_dims):
        j0 = 0
        for bj, cdim in enumerate(col_dims):
            blk = blocks[bi][bj]
            if blk is not None:
                if (blk.m, blk.n) != (rdim, cdim):
                    raise ValueError("block (%d,%d) has shape (%d,%d), wanted (%d,%d)" % (bi, bj, blk.m, blk.n, rdim, cdim))
                for i in range(rdim):
                    for j in range(cdim):
                        out.rows[i0 + i][j0 + j] = blk.rows[i][j]
            j0 += cdim
        i0 += rdim
    return out


def _bareiss_rank(a: Mat) -> int:
    """Rank by fraction-free elimination on a cleared-denominator integer copy."""
    rows = []
    for r in a.rows:
        den = 1
        for x in r:
            den = den * x.denominator // gcd(den, x.denominator)
        rows.append([int(x * den) for x in r])
    m, n = a.m, a.n
    rank = 0
    prev = 1
    row = 0
    for col in range(n):
        piv = None
        for i in range(row, m):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[row], rows[piv] = rows[piv], rows[row]
        for i in range(row + 1, m):
            for j in range(col + 1, n):
                rows[i][j] = (rows[row][col] * rows[i][j] - rows[i][col] * rows[row][j]) // prev
            rows[i][col] = 0
        prev = rows[row][col]
        rank += 1
        row += 1
        if row == m:
            break
    return rank


class SparseEliminator:
    """Incremental echelon form for sparse rational vectors.

    Vectors are dicts {coordinate index: Fraction}.  add() keeps the vector
    when it is independent of everything seen so far and reports which stored
    vectors are selected; express() rewrites a vector as a combination of the
    selected ones.
    """

    def __init__(self):
        # pivot column -> (normalized row dict, combo dict over selected ids)
        self.rows = {}
        self.selected = []

    def _reduce(self, vec):
        v = {k: Fraction(x) for k, x in vec.items() if x}
        combo = {}
        while v:
            p = min(v)
            if p not in self.rows:
                break
            c = v[p]
            row, rcombo = self.rows[p]
            for k, x in row.items():
                nv = v.get(k, Fraction(0)) - c * x
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
            for k, x in rcombo.items():
                nc = combo.get(k, Fraction(0)) + c * x
                if nc:
                    combo[k] = nc
                else:
                    combo.pop(k, None)
        return v, combo

    def add(self, vec, tag=None):
        """Insert vec; returns its tag when independent, else None."""
        v, combo = self._reduce(vec)
        if not v:
            return None
        if tag is None:
            tag = len(self.selected)
        p = min(v)
        pv = v[p]
        row = {k: x / pv for k, x in v.items()}
        # vec = residual + sum(combo * selected)  =>  row = (vec - sum(...)) / pv
        rcombo = {tag: Fraction(1) / pv}
        for k, x in combo.items():
            rcombo[k] = rcombo.get(k, Fraction(0)) - x / pv
        self.rows[p] = (row, rcombo)
        self.selected.append(tag)
        return tag

    def express(self, vec):
        """Combination dict over selected tags with vec = sum c_i * sel_i, or None."""
        v, combo = self._reduce(vec)
        if v:
            return None
        return combo

    @property
    def rank(self) -> int:
        return len(self.selected)
