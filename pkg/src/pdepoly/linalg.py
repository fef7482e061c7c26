"""Dense exact linear algebra over Q(i).

Everything is plain Gauss-Jordan elimination on :class:`GaussianRational`
entries. The pivot in each column is the first non-zero entry at or below the
current row, so results are deterministic. Null-space bases are the usual
free-column basis read off the reduced row-echelon form: one vector per free
column, with a 1 in that column and 0 in every other free column.

Column and row indices are 0-based throughout this module.
"""

from __future__ import annotations

from typing import List, NamedTuple, Sequence, Tuple

from .errors import DimensionMismatch, Inconsistent
from .field import ONE, ZERO, GaussianRational, as_scalar

__all__ = [
    "ExactMatrix",
    "RREF",
    "Solution",
    "rref",
    "rank",
    "nullspace",
    "solve",
    "span_equal",
    "in_column_span",
    "nullity",
    "hstack",
    "vstack",
]


class ExactMatrix:
    """Immutable ``rows x cols`` matrix of Gaussian rationals."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Sequence[Sequence] = (), cols: int | None = None):
        grid = tuple(tuple(as_scalar(x) for x in row) for row in data)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        for r in grid:
            if len(r) != cols:
                raise DimensionMismatch("ragged matrix rows")
        self.rows = len(grid)
        self.cols = cols
        self._data = grid

    @classmethod
    def _raw(cls, grid, cols):
        obj = object.__new__(cls)
        obj._data = grid
        obj.rows = len(grid)
        obj.cols = cols
        return obj

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls._raw(tuple((ZERO,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int, c=ONE) -> "ExactMatrix":
        c = as_scalar(c)
        return cls._raw(
            tuple(tuple(c if i == j else ZERO for j in range(n)) for i in range(n)), n
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None):
        columns = [[as_scalar(x) for x in c] for c in columns]
        if not columns:
            return cls.zeros(rows or 0, 0)
        n = len(columns[0])
        if rows is not None and n != rows:
            raise DimensionMismatch("column length does not match row count")
        if any(len(c) != n for c in columns):
            raise DimensionMismatch("columns of different lengths")
        return cls._raw(tuple(tuple(c[i] for c in columns) for i in range(n)), len(columns))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, key):
        i, j = key
        return self._data[i][j]

    def row(self, i) -> Tuple[GaussianRational, ...]:
        return self._data[i]

    def column(self, j) -> Tuple[GaussianRational, ...]:
        return tuple(r[j] for r in self._data)

    def columns(self) -> List[Tuple[GaussianRational, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def to_lists(self) -> List[List[GaussianRational]]:
        return [list(r) for r in self._data]

    def submatrix(self, row_range, col_range) -> "ExactMatrix":
        r0, r1 = row_range
        c0, c1 = col_range
        return ExactMatrix._raw(tuple(r[c0:c1] for r in self._data[r0:r1]), c1 - c0)

    def transpose(self) -> "ExactMatrix":
        if not self.rows:
            return ExactMatrix.zeros(self.cols, 0)
        return ExactMatrix._raw(tuple(zip(*self._data)), self.rows)

    def is_zero(self) -> bool:
        return not any(x for r in self._data for x in r)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.shape, self._data))

    def __neg__(self):
        return ExactMatrix._raw(tuple(tuple(-x for x in r) for r in self._data), self.cols)

    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes differ: {self.shape} vs {other.shape}")
        return ExactMatrix._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.cols,
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ExactMatrix":
        c = as_scalar(c)
        return ExactMatrix._raw(tuple(tuple(c * x for x in r) for r in self._data), self.cols)

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            ocols = other.columns()
            return ExactMatrix._raw(
                tuple(tuple(_dot(r, c) for c in ocols) for r in self._data), other.cols
            )
        vec = [as_scalar(x) for x in other]
        if len(vec) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vec)} for {self.shape} matrix")
        return [_dot(r, vec) for r in self._data]

    def __rmatmul__(self, other):
        # row vector times matrix
        vec = [as_scalar(x) for x in other]
        if len(vec) != self.rows:
            raise DimensionMismatch(f"row vector of length {len(vec)} for {self.shape} matrix")
        out = [ZERO] * self.cols
        for a, r in zip(vec, self._data):
            if a:
                out = [o + a * x if x else o for o, x in zip(out, r)]
        return out

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return f"ExactMatrix({self.rows}x{self.cols}: [{body}])"


def _dot(u, v) -> GaussianRational:
    total = ZERO
    for a, b in zip(u, v):
        if a and b:
            total = total + a * b
    return total


def hstack(*mats: ExactMatrix) -> ExactMatrix:
    if not mats:
        raise ValueError("nothing to stack")
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise DimensionMismatch("hstack needs equal row counts")
    grid = tuple(sum((m.row(i) for m in mats), ()) for i in range(rows))
    return ExactMatrix._raw(grid, sum(m.cols for m in mats))


def vstack(*mats: ExactMatrix) -> ExactMatrix:
    if not mats:
        raise ValueError("nothing to stack")
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise DimensionMismatch("vstack needs equal column counts")
    return ExactMatrix._raw(sum((m._data for m in mats), ()), cols)


class RREF(NamedTuple):
    R: ExactMatrix
    pivot_columns: Tuple[int, ...]


class Solution(NamedTuple):
    particular: List[GaussianRational]
    homogeneous: ExactMatrix


def _gauss_jordan(grid: List[List[GaussianRational]], ncols: int):
    """Reduce ``grid`` in place; return pivot columns."""
    nrows = len(grid)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if grid[i][c]), None)
        if p is None:
            continue
        if p != r:
            grid[r], grid[p] = grid[p], grid[r]
        prow = grid[r]
        inv = prow[c].inverse()
        if inv != ONE:
            prow = grid[r] = [x * inv if x else x for x in prow]
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = grid[i]
            f = row[c]
            if f:
                for j in nz:
                    row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return tuple(pivots)


def rref(M: ExactMatrix) -> RREF:
    """Reduced row-echelon form and (0-based) pivot columns."""
    grid = M.to_lists()
    pivots = _gauss_jordan(grid, M.cols)
    return RREF(ExactMatrix._raw(tuple(tuple(r) for r in grid), M.cols), pivots)


def rank(M: ExactMatrix) -> int:
    return len(rref(M).pivot_columns)


def _kernel_from_rref(grid, pivots, ncols) -> ExactMatrix:
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    vectors = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for i, pc in enumerate(pivots):
            x = grid[i][f]
            if x:
                v[pc] = -x
        vectors.append(v)
    if not vectors:
        return ExactMatrix.zeros(ncols, 0)
    return ExactMatrix.from_columns(vectors)


def nullspace(M: ExactMatrix) -> ExactMatrix:
    """Canonical basis of ``ker M`` as the columns of a ``cols x nullity`` matrix."""
    R, pivots = rref(M)
    return _kernel_from_rref(R._data, pivots, M.cols)


def nullity(M: ExactMatrix) -> int:
    return M.cols - rank(M)


def solve(M: ExactMatrix, b: Sequence) -> Solution:
    """Solve ``M v = b``.

    Returns the particular solution with every free variable set to zero,
    together with :func:`nullspace` of ``M``. Raises :class:`Inconsistent`
    when ``rank(M) < rank([M | b])``.
    """
    b = [as_scalar(x) for x in b]
    if len(b) != M.rows:
        raise DimensionMismatch(f"right-hand side has length {len(b)}, matrix has {M.rows} rows")
    grid = [list(r) + [x] for r, x in zip(M._data, b)]
    pivots = _gauss_jordan(grid, M.cols + 1)
    if pivots and pivots[-1] == M.cols:
        raise Inconsistent("rank(M) < rank([M | b]): the system has no solution")
    v = [ZERO] * M.cols
    for i, pc in enumerate(pivots):
        v[pc] = grid[i][M.cols]
    return Solution(v, _kernel_from_rref(grid, pivots, M.cols))


def span_equal(A: ExactMatrix, B: ExactMatrix) -> bool:
    """True iff the column spans of ``A`` and ``B`` coincide."""
    if A.rows != B.rows:
        raise DimensionMismatch(f"row counts differ: {A.rows} vs {B.rows}")
    ra = rank(A)
    return ra == rank(B) == rank(hstack(A, B))


def in_column_span(A: ExactMatrix, v: Sequence) -> bool:
    """True iff ``v`` is a linear combination of the columns of ``A``."""
    try:
        solve(A, v)
    except Inconsistent:
        return False
    return True
