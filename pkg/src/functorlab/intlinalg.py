"""Dense exact linear algebra over the integers, with rational spillover.

Matrices are immutable and carry int or Fraction entries (never floats).
The integer normal forms drive everything downstream:

  * hermite_normal_form  - canonical row form; lattice equality is HNF equality
  * smith_normal_form    - A = U*S*V with U, V unimodular and a divisibility chain
  * kernel_lattice, cokernel_invariants, lattice_intersection, saturation

Pivot policy for the Smith form: smallest nonzero absolute value in the
remaining block, ties broken by row-major scan order, so runs are repeatable.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm


def _norm(v):
    """Force an exact scalar: ints stay, integral Fractions collapse to int."""
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else v
    raise TypeError(f"exact scalar required, got {type(v).__name__}")


class Matrix:
    """Immutable dense matrix with exact entries."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols: int | None = None):
        data = tuple(tuple(_norm(v) for v in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != width:
                raise ValueError(f"declared {ncols} columns, rows have {width}")
            ncols = width
        elif ncols is None:
            ncols = 0
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(((0,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @classmethod
    def from_cols(cls, cols, nrows: int | None = None) -> "Matrix":
        cols = tuple(tuple(c) for c in cols)
        if cols:
            nrows = len(cols[0])
        elif nrows is None:
            nrows = 0
        return cls((tuple(c[i] for c in cols) for i in range(nrows)), len(cols))

    # -- structure ---------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def cols(self) -> tuple:
        return tuple(self.col(j) for j in range(self.ncols))

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        row_idx, col_idx = tuple(row_idx), tuple(col_idx)
        return Matrix(
            (tuple(self.rows[i][j] for j in col_idx) for i in row_idx), len(col_idx)
        )

    def to_lists(self) -> list[list]:
        return [list(r) for r in self.rows]

    def transpose(self) -> "Matrix":
        if not self.rows:
            return Matrix(tuple(() for _ in range(self.ncols)), 0)
        return Matrix(zip(*self.rows), self.nrows)

    # -- predicates ---------------------------------------------------------

    @property
    def is_integral(self) -> bool:
        return all(isinstance(v, int) for r in self.rows for v in r)

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for r in self.rows for v in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix(
            (tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.ncols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix((tuple(-v for v in r) for r in self.rows), self.ncols)

    def scale(self, c) -> "Matrix":
        c = _norm(c)
        return Matrix((tuple(c * v for v in r) for r in self.rows), self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"inner dimensions differ: {self.shape} @ {other.shape}")
        bt = tuple(zip(*other.rows)) if other.rows else ((),) * other.ncols
        return Matrix(
            (tuple(sum(a * b for a, b in zip(row, col)) for col in bt) for row in self.rows),
            other.ncols,
        )

    def matvec(self, vec) -> tuple:
        vec = tuple(vec)
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.rows)

    def trace(self):
        if self.nrows != self.ncols:
            raise ValueError("trace needs a square matrix")
        return sum(self.rows[i][i] for i in range(self.nrows))

    # -- exact numerics -------------------------------------------------------

    def denominator_lcm(self) -> int:
        d = 1
        for r in self.rows:
            for v in r:
                if isinstance(v, Fraction):
                    d = lcm(d, v.denominator)
        return d

    def rank(self) -> int:
        """Rank over the rationals (row-scale to integers, then echelon)."""
        rows = []
        for r in self.rows:
            d = 1
            for v in r:
                if isinstance(v, Fraction):
                    d = lcm(d, v.denominator)
            rows.append([int(v * d) for v in r])
        pivots = _echelon(rows, self.ncols)
        return len(pivots)

    def det(self) -> int:
        """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
        if self.nrows != self.ncols:
            raise ValueError("determinant needs a square matrix")
        if not self.is_integral:
            raise ValueError("determinant implemented for integer matrices only")
        n = self.nrows
        if n == 0:
            return 1
        m = self.to_lists()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k]:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]


def hstack(*mats: Matrix) -> Matrix:
    nrows = mats[0].nrows
    if any(m.nrows != nrows for m in mats):
        raise ValueError("row counts differ")
    return Matrix(
        (tuple(v for m in mats for v in m.rows[i]) for i in range(nrows)),
        sum(m.ncols for m in mats),
    )


def vstack(*mats: Matrix) -> Matrix:
    ncols = mats[0].ncols
    if any(m.ncols != ncols for m in mats):
        raise ValueError("column counts differ")
    return Matrix((r for m in mats for r in m.rows), ncols)


def block_diag(*mats: Matrix) -> Matrix:
    total_c = sum(m.ncols for m in mats)
    rows = []
    left = 0
    for m in mats:
        for r in m.rows:
            rows.append((0,) * left + r + (0,) * (total_c - left - m.ncols))
        left += m.ncols
    return Matrix(rows, total_c)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (x, y, g) with a*x + b*y == g == gcd(a, b) >= 0."""
    x0, y0, r0 = 1, 0, a
    x1, y1, r1 = 0, 1, b
    while r1:
        q = r0 // r1
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
        r0, r1 = r1, r0 - q * r1
    if r0 < 0:
        x0, y0, r0 = -x0, -y0, -r0
    return x0, y0, r0


def _echelon(rows: list[list[int]], width: int, transform: list[list[int]] | None = None):
    """In-place integer row echelon with back-reduction (canonical HNF layout).

    Forward pass: per column, pick the surviving pivot candidate of smallest
    absolute value (first on ties), zero the rest of the column below via xgcd
    combinations, make the pivot positive.  Back pass: reduce entries above
    each pivot into [0, pivot).  `transform` rows receive the same row
    operations.  Returns the list of pivot columns; rows beyond len(pivots)
    end up zero.
    """
    m = len(rows)
    pivots: list[int] = []
    r = 0

    def row_op_combine(i, k, x, y, u, v):
        # (row_i, row_k) <- (x*row_i + y*row_k, u*row_i + v*row_k)
        for store in (rows, transform) if transform is not None else (rows,):
            ri, rk = store[i], store[k]
            for t in range(len(ri)):
                a, b = ri[t], rk[t]
                ri[t] = x * a + y * b
                rk[t] = u * a + v * b

    def row_sub(i, k, q):
        for store in (rows, transform) if transform is not None else (rows,):
            ri, rk = store[i], store[k]
            for t in range(len(ri)):
                ri[t] -= q * rk[t]

    def row_swap(i, k):
        for store in (rows, transform) if transform is not None else (rows,):
            store[i], store[k] = store[k], store[i]

    def row_neg(i):
        for store in (rows, transform) if transform is not None else (rows,):
            store[i] = [-v for v in store[i]]

    for j in range(width):
        if r == m:
            break
        best = None
        for i in range(r, m):
            v = rows[i][j]
            if v and (best is None or abs(v) < abs(rows[best][j])):
                best = i
        if best is None:
            continue
        if best != r:
            row_swap(r, best)
        for i in range(r + 1, m):
            b = rows[i][j]
            if not b:
                continue
            a = rows[r][j]
            if b % a == 0:
                row_sub(i, r, b // a)
            else:
                x, y, g = xgcd(a, b)
                row_op_combine(r, i, x, y, -(b // g), a // g)
        if rows[r][j] < 0:
            row_neg(r)
        pivots.append(j)
        r += 1

    # canonical back-reduction: entries above a pivot lie in [0, pivot).
    # Must go left to right: subtracting pivot row idx only touches columns
    # >= pivots[idx], so earlier pivot columns stay reduced.
    for idx in range(len(pivots)):
        j = pivots[idx]
        p = rows[idx][j]
        for i in range(idx):
            q = rows[i][j] // p
            if q:
                row_sub(i, idx, q)
    return pivots


def hermite_normal_form(mat: Matrix) -> Matrix:
    """Canonical row Hermite normal form, zero rows dropped.

    Two integer row spans are equal iff their forms are equal.
    """
    if not mat.is_integral:
        raise ValueError("Hermite form needs integer entries")
    rows = mat.to_lists()
    pivots = _echelon(rows, mat.ncols)
    return Matrix(rows[: len(pivots)], mat.ncols)


def hnf_with_transform(mat: Matrix) -> tuple[Matrix, Matrix]:
    """Return (H, U) with U unimodular, U @ mat == H, H echelon incl. zero rows."""
    if not mat.is_integral:
        raise ValueError("Hermite form needs integer entries")
    rows = mat.to_lists()
    transform = Matrix.identity(mat.nrows).to_lists()
    _echelon(rows, mat.ncols, transform)
    return Matrix(rows, mat.ncols), Matrix(transform, mat.nrows)


def left_kernel(mat: Matrix) -> Matrix:
    """Canonical basis rows of {y : y @ mat == 0}."""
    h, u = hnf_with_transform(mat)
    rows = [u.rows[i] for i in range(mat.nrows) if not any(h.rows[i])]
    return hermite_normal_form(Matrix(rows, mat.nrows))


@dataclass(frozen=True)
class Lattice:
    """Sublattice of Z^ambient_rank, held as canonical HNF basis rows."""

    ambient_rank: int
    basis: Matrix

    @classmethod
    def from_rows(cls, ambient_rank: int, rows) -> "Lattice":
        mat = Matrix(list(rows), ambient_rank)
        if mat.ncols != ambient_rank:
            raise ValueError("row length differs from ambient rank")
        return cls(ambient_rank, hermite_normal_form(mat))

    @classmethod
    def zero(cls, ambient_rank: int) -> "Lattice":
        return cls(ambient_rank, Matrix((), ambient_rank))

    @classmethod
    def full(cls, ambient_rank: int) -> "Lattice":
        return cls(ambient_rank, Matrix.identity(ambient_rank))

    @property
    def rank(self) -> int:
        return self.basis.nrows

    def contains(self, vec) -> bool:
        vec = list(vec)
        if len(vec) != self.ambient_rank:
            raise ValueError("vector length differs from ambient rank")
        pivot_of = {}
        for i, row in enumerate(self.basis.rows):
            for j, v in enumerate(row):
                if v:
                    pivot_of[j] = i
                    break
        for j in range(self.ambient_rank):
            v = vec[j]
            if not v:
                continue
            i = pivot_of.get(j)
            if i is None:
                return False
            p = self.basis.rows[i][j]
            if v % p:
                return False
            q = v // p
            for t in range(j, self.ambient_rank):
                vec[t] -= q * self.basis.rows[i][t]
        return True

    def contains_lattice(self, other: "Lattice") -> bool:
        return all(self.contains(row) for row in other.basis.rows)


def kernel_lattice(mat: Matrix) -> Lattice:
    """Integer solutions of mat @ x == 0, as a (saturated) lattice in Z^ncols."""
    ker = left_kernel(mat.transpose())
    return Lattice(mat.ncols, ker)


@dataclass(frozen=True)
class CokernelInvariants:
    """Torsion invariant factors (each > 1, divisibility order) and free rank."""

    torsion: tuple[int, ...]
    free_rank: int

    @property
    def trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0


def cokernel_invariants(mat: Matrix) -> CokernelInvariants:
    """Invariants of Z^nrows / (column span of mat)."""
    diag = smith_normal_form(mat).diagonal
    torsion = tuple(d for d in diag if d > 1)
    free = mat.nrows - sum(1 for d in diag if d)
    return CokernelInvariants(torsion, free)


@dataclass(frozen=True)
class SNFDecomposition:
    """Smith normal form A = U @ S @ V, U and V unimodular, S diagonal with
    d_1 | d_2 | ... | d_r, all nonnegative."""

    U: Matrix
    S: Matrix
    V: Matrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.S.rows[i][i] for i in range(min(self.S.nrows, self.S.ncols)))


def smith_normal_form(mat: Matrix) -> SNFDecomposition:
    if not mat.is_integral:
        raise ValueError("Smith form needs integer entries")
    m, n = mat.shape
    s = mat.to_lists()
    u = Matrix.identity(m).to_lists()
    v = Matrix.identity(n).to_lists()

    # Row ops on s are mirrored by inverse column ops on u, column ops on s by
    # inverse row ops on v, so mat == u @ s @ v stays true throughout.

    def row_sub(i, k, q):  # s: row_i -= q*row_k;  u: col_k += q*col_i
        si, sk = s[i], s[k]
        for t in range(n):
            si[t] -= q * sk[t]
        for urow in u:
            urow[k] += q * urow[i]

    def row_swap(i, k):
        s[i], s[k] = s[k], s[i]
        for urow in u:
            urow[i], urow[k] = urow[k], urow[i]

    def row_neg(i):
        s[i] = [-x for x in s[i]]
        for urow in u:
            urow[i] = -urow[i]

    def col_sub(j, l, q):  # s: col_j -= q*col_l;  v: row_l += q*row_j
        for srow in s:
            srow[j] -= q * srow[l]
        vl, vj = v[l], v[j]
        for t in range(n):
            vl[t] += q * vj[t]

    def col_swap(j, l):
        for srow in s:
            srow[j], srow[l] = srow[l], srow[j]
        v[j], v[l] = v[l], v[j]

    t = 0
    while t < min(m, n):
        # pivot: smallest |entry| in the remaining block, row-major scan
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                val = s[i][j]
                if val and (pivot is None or abs(val) < abs(s[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            row_swap(t, pivot[0])
        if pivot[1] != t:
            col_swap(t, pivot[1])
        while True:
            if s[t][t] < 0:
                row_neg(t)
            p = s[t][t]
            dirty = False
            for i in range(t + 1, m):
                if s[i][t]:
                    q = s[i][t] // p
                    if q:
                        row_sub(i, t, q)
                    if s[i][t]:  # remainder became the smaller pivot candidate
                        row_swap(t, i)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, n):
                if s[t][j]:
                    q = s[t][j] // p
                    if q:
                        col_sub(j, t, q)
                    if s[t][j]:
                        col_swap(t, j)
                        dirty = True
                        break
            if dirty:
                continue
            # row and column are clear; enforce that p divides the rest
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if s[i][j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_sub(t, offender, -1)  # fold the offending row in and restart
        t += 1

    return SNFDecomposition(Matrix(u, m), Matrix(s, n), Matrix(v, n))


def lattice_intersection(a: Lattice, b: Lattice) -> Lattice:
    if a.ambient_rank != b.ambient_rank:
        raise ValueError("ambient ranks differ")
    if a.rank == 0 or b.rank == 0:
        return Lattice.zero(a.ambient_rank)
    stacked = vstack(a.basis, b.basis)
    relations = left_kernel(stacked)
    rows = [
        a.basis.transpose().matvec(rel[: a.rank])
        for rel in relations.rows
    ]
    return Lattice.from_rows(a.ambient_rank, rows)


def saturation(lat: Lattice) -> Lattice:
    """Smallest sublattice containing lat whose quotient is torsion-free."""
    if lat.rank == 0:
        return lat
    dec = smith_normal_form(lat.basis)
    rank = sum(1 for d in dec.diagonal if d)
    return Lattice.from_rows(lat.ambient_rank, dec.V.rows[:rank])


def lattice_index(lat: Lattice) -> int | None:
    """Index [Z^n : lat]; None when the lattice has infinite index."""
    if lat.rank < lat.ambient_rank:
        return None
    result = 1
    for i in range(lat.ambient_rank):
        result *= lat.basis.rows[i][i]
    return result


def solve_int(mat: Matrix, target) -> tuple | None:
    """One integer solution x of mat @ x == target, or None."""
    h, u = hnf_with_transform(mat.transpose())
    b = list(target)
    if len(b) != mat.nrows:
        raise ValueError("target length differs from row count")
    coeffs = [0] * h.nrows
    for i in range(h.nrows):
        j = next((jj for jj, v in enumerate(h.rows[i]) if v), None)
        if j is None:
            continue
        if b[j] % h.rows[i][j]:
            return None
        c = b[j] // h.rows[i][j]
        coeffs[i] = c
        if c:
            for t in range(mat.nrows):
                b[t] -= c * h.rows[i][t]
    if any(b):
        return None
    x = [0] * mat.ncols
    for i, c in enumerate(coeffs):
        if c:
            for t in range(mat.ncols):
                x[t] += c * u.rows[i][t]
    return tuple(x)


def solve_rational(mat: Matrix, rhs: Matrix) -> Matrix:
    """Unique rational solution X of mat @ X == rhs for full-column-rank mat."""
    m, n = mat.shape
    if rhs.nrows != m:
        raise ValueError("row counts differ")
    aug = [[Fraction(v) for v in row] + [Fraction(w) for w in rrow]
           for row, rrow in zip(mat.rows, rhs.rows)]
    pivots = []
    r = 0
    for j in range(n):
        pivot_row = next((i for i in range(r, m) if aug[i][j]), None)
        if pivot_row is None:
            raise ValueError("matrix does not have full column rank")
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        p = aug[r][j]
        aug[r] = [v / p for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][j]:
                f = aug[i][j]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(j)
        r += 1
    for i in range(r, m):
        if any(aug[i][n:]):
            raise ValueError("inconsistent system")
    return Matrix((aug[i][n:] for i in range(n)), rhs.ncols)


def rational_inverse(mat: Matrix) -> Matrix:
    if mat.nrows != mat.ncols:
        raise ValueError("inverse needs a square matrix")
    return solve_rational(mat, Matrix.identity(mat.nrows))
