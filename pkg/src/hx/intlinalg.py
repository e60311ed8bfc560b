"""Exact dense linear algebra over the integers and rationals.

Everything here is exact: matrices hold arbitrary-precision Python ints,
rank/kernel computations run over ``fractions.Fraction``, determinants use
fraction-free Bareiss elimination, and the Smith normal form is computed by
gcd reduction while tracking the unimodular row and column transforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError


@dataclass(frozen=True)
class IntMatrix:
    """Immutable dense integer matrix, entries stored row-major.

    Zero-row and zero-column matrices are legal values; the 0x0 matrix acts
    as the empty product (determinant 1).
    """

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        for e in self.entries:
            if type(e) is not int:
                raise DimensionError(f"matrix entries must be ints, got {type(e).__name__}")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        """Build a matrix from a sequence of rows.

        ``cols`` disambiguates the width of a matrix with zero rows.
        """
        nrows = len(rows)
        if nrows == 0:
            return IntMatrix(0, 0 if cols is None else cols, ())
        ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise DimensionError("ragged rows")
        return IntMatrix(nrows, ncols, tuple(int(x) for row in rows for x in row))

    @staticmethod
    def from_columns(columns: Sequence[Sequence[int]], rows: int | None = None) -> "IntMatrix":
        """Build a matrix whose columns are the given vectors."""
        ncols = len(columns)
        if ncols == 0:
            return IntMatrix(0 if rows is None else rows, 0, ())
        nrows = len(columns[0])
        for c in columns:
            if len(c) != nrows:
                raise DimensionError("ragged columns")
        return IntMatrix(nrows, ncols, tuple(int(columns[j][i]) for i in range(nrows) for j in range(ncols)))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @staticmethod
    def zero(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index ({i}, {j}) out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j :: self.cols] if self.cols else ()

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        n, k, m = self.rows, self.cols, other.cols
        out = [0] * (n * m)
        for i in range(n):
            base = i * k
            for t in range(k):
                a = self.entries[base + t]
                if a:
                    ob = t * m
                    rbase = i * m
                    for j in range(m):
                        out[rbase + j] += a * other.entries[ob + j]
        return IntMatrix(n, m, tuple(out))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("cannot add matrices of different shapes")
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def select_rows(self, indices: Sequence[int]) -> "IntMatrix":
        """Rows in the given order (repeats and reorders allowed)."""
        return IntMatrix(
            len(indices), self.cols, tuple(x for i in indices for x in self.row(i))
        )

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)


@dataclass(frozen=True)
class SmithDecomposition:
    """Factorization M = S * D * T with S, T unimodular.

    ``diag`` holds the positive invariant factors d_1 | d_2 | ... | d_r;
    D is the s.cols x t.rows matrix with ``diag`` on its leading diagonal.
    """

    s: IntMatrix
    t: IntMatrix
    diag: tuple[int, ...]

    def middle(self) -> IntMatrix:
        m, k = self.s.cols, self.t.rows
        entries = [0] * (m * k)
        for i, d in enumerate(self.diag):
            entries[i * k + i] = d
        return IntMatrix(m, k, tuple(entries))

    def reassembled(self) -> IntMatrix:
        return self.s @ self.middle() @ self.t


def vstack(top: IntMatrix, bottom: IntMatrix) -> IntMatrix:
    if top.cols != bottom.cols:
        raise DimensionError("column counts differ")
    return IntMatrix(top.rows + bottom.rows, top.cols, top.entries + bottom.entries)


def mat_vec(m: IntMatrix, vec: Sequence) -> list:
    """Multiply by a vector with int or Fraction entries (exact)."""
    if len(vec) != m.cols:
        raise DimensionError(f"vector length {len(vec)} != {m.cols} columns")
    return [sum(m.entries[i * m.cols + j] * vec[j] for j in range(m.cols)) for i in range(m.rows)]


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise DimensionError("vector lengths differ")
    return sum(a * b for a, b in zip(u, v))


def det(m: IntMatrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination.

    The 0x0 determinant is 1 (empty product).
    """
    if m.rows != m.cols:
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot_row is None:
                return 0
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - aik * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _rref(m: IntMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q. Returns (rows, pivot columns)."""
    rows = [[Fraction(x) for x in m.row(i)] for i in range(m.rows)]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pivot_row = next((i for i in range(r, m.rows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m.rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return rows, pivots


def rank(m: IntMatrix) -> int:
    """Rank over Q."""
    return len(_rref(m)[1])


def _primitive(vec: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector, first nonzero positive."""
    denom = math.lcm(*(x.denominator for x in vec)) if vec else 1
    ints = [int(x * denom) for x in vec]
    g = math.gcd(*ints) if ints else 0
    if g > 1:
        ints = [x // g for x in ints]
    first = next((x for x in ints if x != 0), 0)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def kernel_basis(m: IntMatrix) -> list[tuple[int, ...]]:
    """Basis of the rational kernel as primitive integer vectors.

    One vector per free column of the echelon form, ordered by free column
    index; each is scaled primitive with its first nonzero entry positive.
    """
    rows, pivots = _rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for r_idx, p in enumerate(pivots):
            v[p] = -rows[r_idx][free]
        basis.append(_primitive(v))
    return basis


def gcd_of_vector(vec: Iterable[int]) -> int:
    """gcd of absolute values; 0 for an empty or all-zero vector."""
    return math.gcd(*(int(x) for x in vec)) if vec else 0


def smith_normal_form(m: IntMatrix) -> SmithDecomposition:
    """Smith normal form with unimodular transforms, M = S * D * T.

    Diagonalizes by moving a smallest nonzero entry into pivot position and
    gcd-reducing its row and column, then repairs the divisibility chain.
    S and T are maintained as the inverses of the accumulated row/column
    operations so the product reassembles M exactly.
    """
    nrows, ncols = m.rows, m.cols
    d = m.to_rows()
    s = IntMatrix.identity(nrows).to_rows()
    t = IntMatrix.identity(ncols).to_rows()

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        for row in s:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, q):
        # d[i] += q * d[j]; compensate in S columns.
        d[i] = [x + q * y for x, y in zip(d[i], d[j])]
        for row in s:
            row[j] -= q * row[i]

    def negate_row(i):
        d[i] = [-x for x in d[i]]
        for row in s:
            row[i] = -row[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        t[i], t[j] = t[j], t[i]

    def add_col(j, i, q):
        # column j += q * column i; compensate in T rows.
        for row in d:
            row[j] += q * row[i]
        t[i] = [x - q * y for x, y in zip(t[i], t[j])]

    def reduce_pivot(p):
        """Clear row p and column p outside the pivot, leaving it positive."""
        while True:
            restart = False
            for i in range(p + 1, nrows):
                if d[i][p] == 0:
                    continue
                q = d[i][p] // d[p][p]
                add_row(i, p, -q)
                if d[i][p] != 0:
                    swap_rows(i, p)
                    restart = True
                    break
            if restart:
                continue
            for j in range(p + 1, ncols):
                if d[p][j] == 0:
                    continue
                q = d[p][j] // d[p][p]
                add_col(j, p, -q)
                if d[p][j] != 0:
                    swap_cols(j, p)
                    restart = True
                    break
            if not restart:
                break
        if d[p][p] < 0:
            negate_row(p)

    r = 0
    for p in range(min(nrows, ncols)):
        best = None
        for i in range(p, nrows):
            for j in range(p, ncols):
                if d[i][j] != 0 and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        if best[0] != p:
            swap_rows(best[0], p)
        if best[1] != p:
            swap_cols(best[1], p)
        reduce_pivot(p)
        r += 1

    # Repair divisibility: pull gcd(d_i, d_{i+1}) forward until the chain holds.
    while True:
        bad = next((i for i in range(r - 1) if d[i + 1][i + 1] % d[i][i] != 0), None)
        if bad is None:
            break
        add_col(bad, bad + 1, 1)
        reduce_pivot(bad)
    # The repair can flip the sign of the entry after the repaired pivot.
    for i in range(r):
        if d[i][i] < 0:
            negate_row(i)

    return SmithDecomposition(
        s=IntMatrix.from_rows(s, cols=nrows),
        t=IntMatrix.from_rows(t, cols=ncols),
        diag=tuple(d[i][i] for i in range(r)),
    )


def solve_exact(a: IntMatrix, b: Sequence) -> list[Fraction] | None:
    """Solve a*x = b exactly when ``a`` has full column rank.

    Returns None when the system is inconsistent. Raises if the columns of
    ``a`` are linearly dependent (no unique solution to report).
    """
    if len(b) != a.rows:
        raise DimensionError(f"rhs length {len(b)} != {a.rows} rows")
    rows = [[Fraction(x) for x in a.row(i)] + [Fraction(b[i])] for i in range(a.rows)]
    pivots: list[int] = []
    r = 0
    width = a.cols + 1
    for c in range(a.cols):
        pivot_row = next((i for i in range(r, a.rows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(a.rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if len(pivots) < a.cols:
        raise DimensionError("matrix does not have full column rank")
    for i in range(r, a.rows):
        if rows[i][width - 1] != 0:
            return None
    x = [Fraction(0)] * a.cols
    for r_idx, p in enumerate(pivots):
        x[p] = rows[r_idx][width - 1]
    return x


def invert_unimodular(u: IntMatrix) -> IntMatrix:
    """Exact inverse of an integer matrix with determinant +-1."""
    if u.rows != u.cols:
        raise DimensionError("cannot invert a non-square matrix")
    n = u.rows
    rows = [[Fraction(x) for x in u.row(i)] + [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    r = 0
    for c in range(n):
        pivot_row = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if pivot_row is None:
            raise DimensionError("matrix is singular")
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    out = []
    for i in range(n):
        row = rows[i][n:]
        if any(x.denominator != 1 for x in row):
            raise DimensionError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return IntMatrix.from_rows(out, cols=n)


def kernel_lattice_basis(m: IntMatrix) -> IntMatrix:
    """Columns form a Z-basis of the saturated integer kernel lattice of m."""
    snf = smith_normal_form(m)
    r = len(snf.diag)
    t_inv = invert_unimodular(snf.t)
    return IntMatrix.from_columns([t_inv.column(j) for j in range(r, m.cols)], rows=m.cols)
