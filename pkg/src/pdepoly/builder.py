"""The block upper-triangular derivative matrix of a polynomial at a point.

Rows and columns are both indexed by the graded multi-index set up to ``L``.
The entry in row ``beta`` and column ``alpha`` is::

    (-i)**|alpha - beta| * C(alpha, beta) * D^(alpha - beta) f(x0)    if beta <= alpha
    0                                                                 otherwise

Grouping rows by ``|beta| = k`` and columns by ``|alpha| = K`` gives blocks
that vanish below the diagonal (``k > K``) and equal ``f(x0) * I`` on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

from .combinatorics import (
    MultiIndex,
    cumulative_count,
    graded_set,
    level_set,
    multi_binomial,
)
from .errors import DimensionMismatch, EmptyList
from .field import ZERO, GaussianRational, i_power
from .linalg import ExactMatrix, vstack
from .polynomial import MultiPoly, as_point

__all__ = [
    "BuiltMatrix",
    "derivative_table",
    "build_block",
    "build_full",
    "derivative_row",
    "build_stacked",
    "block_range",
]


def _check(f: MultiPoly, x0) -> Tuple[GaussianRational, ...]:
    x0 = as_point(x0)
    if len(x0) != f.dimension:
        raise DimensionMismatch(
            f"point has {len(x0)} coordinates but the polynomial has {f.dimension} variables"
        )
    return x0


def derivative_table(f: MultiPoly, x0, L: int) -> Dict[MultiIndex, GaussianRational]:
    """``{gamma: D^gamma f(x0)}`` for every ``|gamma| <= L``."""
    x0 = _check(f, x0)
    table = {}
    for gamma in graded_set(f.dimension, L):
        table[gamma] = f.derivative(gamma).evaluate(x0) if sum(gamma) <= f.degree else ZERO
    return table


def _entry(alpha, beta, table) -> GaussianRational:
    c = multi_binomial(alpha, beta)
    if not c:
        return ZERO
    gamma = tuple(a - b for a, b in zip(alpha, beta))
    value = table[gamma]
    if not value:
        return ZERO
    return i_power(sum(gamma), "-") * value * c


def block_range(d: int, k: int) -> Tuple[int, int]:
    """Half-open 0-based index range of degree level ``k`` in the graded order."""
    return cumulative_count(d, k - 1), cumulative_count(d, k)


def build_block(f: MultiPoly, x0, k: int, K: int, _table=None) -> ExactMatrix:
    """The ``d(k) x d(K)`` block pairing level-``k`` rows with level-``K`` columns."""
    if k < 0 or K < 0:
        raise ValueError("block levels must be non-negative")
    x0 = _check(f, x0)
    rows, cols = level_set(f.dimension, k), level_set(f.dimension, K)
    if k > K:
        return ExactMatrix.zeros(len(rows), len(cols))
    table = _table if _table is not None else derivative_table(f, x0, K - k)
    return ExactMatrix._raw(
        tuple(tuple(_entry(a, b, table) for a in cols) for b in rows), len(cols)
    )


@dataclass(frozen=True)
class BuiltMatrix:
    """``matrix`` together with the cap ``L``, dimension ``d`` and block layout."""

    matrix: ExactMatrix
    L: int
    d: int

    def block_rows(self, k: int) -> Tuple[int, int]:
        return block_range(self.d, k)

    def block(self, k: int, K: int) -> ExactMatrix:
        """Read back block ``(k, K)`` of :attr:`matrix`."""
        if not (0 <= k <= self.L and 0 <= K <= self.L):
            raise IndexError(f"block ({k}, {K}) outside 0..{self.L}")
        return self.matrix.submatrix(block_range(self.d, k), block_range(self.d, K))

    @property
    def size(self) -> int:
        return self.matrix.rows


def build_full(f: MultiPoly, x0, L: int) -> BuiltMatrix:
    """The full ``dbar(L) x dbar(L)`` matrix of ``f`` at ``x0``."""
    if L < 0:
        raise ValueError("degree cap must be non-negative")
    x0 = _check(f, x0)
    table = derivative_table(f, x0, L)
    idx = graded_set(f.dimension, L)
    grid = tuple(tuple(_entry(a, b, table) for a in idx) for b in idx)
    return BuiltMatrix(ExactMatrix._raw(grid, len(idx)), L, f.dimension)


def derivative_row(f: MultiPoly, x0, L: int) -> list:
    """Row vector ``[(-i)^|alpha| D^alpha f(x0)]`` over the graded set up to ``L``."""
    table = derivative_table(f, x0, L)
    return [
        i_power(sum(a), "-") * table[a] if table[a] else ZERO
        for a in graded_set(f.dimension, L)
    ]


def build_stacked(fs: Sequence[MultiPoly], x0, L: int) -> ExactMatrix:
    """Vertical stack of :func:`build_full` over ``fs``, in input order."""
    fs = list(fs)
    if not fs:
        raise EmptyList("need at least one polynomial")
    d = fs[0].dimension
    if any(f.dimension != d for f in fs):
        raise DimensionMismatch("all polynomials must share one dimension")
    return vstack(*(build_full(f, x0, L).matrix for f in fs))
