"""Multi-indices and their graded orderings.

A multi-index is a plain tuple of non-negative ints. Within one total degree
``K`` indices are listed so that ``(K, 0, ..., 0)`` comes first and
``(0, ..., 0, K)`` last, comparing the *last* coordinate first (smaller
first), then the one before it, and so on. In two variables this is the
familiar ``x^3, x^2 y, x y^2, y^3``; in three it gives
``x^3, x^2 y, x y^2, y^3, x^2 z, x y z, y^2 z, x z^2, y z^2, z^3``.

The graded set up to ``L`` concatenates the levels ``0, 1, ..., L``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, factorial as _factorial, prod
from typing import Iterator, Sequence, Tuple

from .errors import DimensionMismatch, NotInSet

MultiIndex = Tuple[int, ...]

__all__ = [
    "MultiIndex",
    "OrderedIndexSet",
    "count",
    "cumulative_count",
    "level_set",
    "graded_set",
    "position_of",
    "multi_binomial",
    "is_leq",
    "index_sub",
    "index_add",
    "factorial",
]


def count(d: int, K: int) -> int:
    """Number of degree-``K`` monomials in ``d`` variables, C(d+K-1, K)."""
    if d < 1:
        raise ValueError("dimension must be positive")
    if K < 0:
        return 0
    return comb(d + K - 1, K)


def cumulative_count(d: int, L: int) -> int:
    """Number of monomials of degree at most ``L``, C(d+L, d). Zero for L < 0."""
    if d < 1:
        raise ValueError("dimension must be positive")
    if L < 0:
        return 0
    return comb(d + L, d)


def _compositions(d: int, K: int) -> list:
    out = []
    for combo in combinations_with_replacement(range(d), K):
        alpha = [0] * d
        for j in combo:
            alpha[j] += 1
        out.append(tuple(alpha))
    return out


@dataclass(frozen=True)
class OrderedIndexSet:
    """An ordered, duplicate-free sequence of multi-indices.

    ``kind`` is ``"level"`` (all indices have degree ``cap``) or ``"graded"``
    (levels ``0..cap`` concatenated).
    """

    dimension: int
    indices: Tuple[MultiIndex, ...]
    kind: str
    cap: int
    _positions: dict = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(
            self, "_positions", {a: n for n, a in enumerate(self.indices)}
        )

    def __len__(self):
        return len(self.indices)

    def __iter__(self) -> Iterator[MultiIndex]:
        return iter(self.indices)

    def __getitem__(self, n):
        return self.indices[n]

    def __contains__(self, alpha):
        return tuple(alpha) in self._positions

    def index(self, alpha) -> int:
        """0-based position of ``alpha``."""
        try:
            return self._positions[tuple(alpha)]
        except KeyError:
            raise NotInSet(
                f"{tuple(alpha)} is not in the {self.kind} set "
                f"(d={self.dimension}, cap={self.cap})"
            ) from None


@lru_cache(maxsize=None)
def level_set(d: int, K: int) -> OrderedIndexSet:
    """All multi-indices of length ``d`` and degree ``K``, in level order."""
    if d < 1 or K < 0:
        raise ValueError("need d >= 1 and K >= 0")
    indices = sorted(_compositions(d, K), key=lambda a: a[::-1])
    return OrderedIndexSet(d, tuple(indices), "level", K)


@lru_cache(maxsize=None)
def graded_set(d: int, L: int) -> OrderedIndexSet:
    """Concatenation of ``level_set(d, K)`` for ``K = 0..L``."""
    if d < 1 or L < 0:
        raise ValueError("need d >= 1 and L >= 0")
    indices = []
    for K in range(L + 1):
        indices.extend(level_set(d, K).indices)
    return OrderedIndexSet(d, tuple(indices), "graded", L)


def position_of(alpha: Sequence[int], index_set: OrderedIndexSet) -> int:
    """1-based position of ``alpha`` in ``index_set``.

    Raises :class:`NotInSet` if ``alpha`` has the wrong length or degree.
    """
    alpha = tuple(alpha)
    if len(alpha) != index_set.dimension:
        raise NotInSet(f"{alpha} has length {len(alpha)}, set has d={index_set.dimension}")
    return index_set.index(alpha) + 1


def is_leq(beta: Sequence[int], alpha: Sequence[int]) -> bool:
    """Component-wise ``beta <= alpha``."""
    return all(b <= a for a, b in zip(alpha, beta))


def index_sub(alpha, beta) -> MultiIndex:
    return tuple(a - b for a, b in zip(alpha, beta))


def index_add(alpha, beta) -> MultiIndex:
    return tuple(a + b for a, b in zip(alpha, beta))


def factorial(alpha) -> int:
    """Multi-index factorial ``alpha! = prod(alpha_j!)``."""
    return prod(_factorial(a) for a in alpha)


def multi_binomial(alpha: Sequence[int], beta: Sequence[int]) -> int:
    """``prod C(alpha_j, beta_j)``, and exactly 0 unless ``beta <= alpha``."""
    if len(alpha) != len(beta):
        raise DimensionMismatch(f"lengths differ: {len(alpha)} vs {len(beta)}")
    out = 1
    for a, b in zip(alpha, beta):
        if b > a or b < 0:
            return 0
        out *= comb(a, b)
    return out
