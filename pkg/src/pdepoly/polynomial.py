"""Sparse multivariate polynomials over Q(i).

A :class:`MultiPoly` maps multi-indices to non-zero :class:`GaussianRational`
coefficients. The zero polynomial has no terms and degree ``-1``.

:func:`apply_operator` is deliberately written without any reference to the
matrix machinery: it pushes ``P(-iD)`` through ``exp(i x0.x) p(x)`` one
partial derivative at a time, so it can be used to check the matrix route.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .combinatorics import (
    MultiIndex,
    cumulative_count,
    graded_set,
    index_add,
    level_set,
)
from .errors import (
    DegreeExceedsCap,
    DimensionMismatch,
    LengthMismatch,
    ZeroPolynomial,
)
from .field import I, ONE, ZERO, GaussianRational, as_scalar

__all__ = [
    "MultiPoly",
    "ExpPoly",
    "derivative",
    "evaluate",
    "coeff_vector",
    "from_coeff_vector",
    "symbol_from_operator",
    "apply_operator",
    "least_nonzero_derivative_order",
    "as_point",
]

_MINUS_I = -I


def as_point(x0) -> Tuple[GaussianRational, ...]:
    return tuple(as_scalar(c) for c in x0)


class MultiPoly:
    """Immutable polynomial in ``dimension`` variables."""

    __slots__ = ("dimension", "_terms", "_hash")

    def __init__(self, dimension: int, terms: Mapping | Iterable = ()):
        if dimension < 1:
            raise ValueError("dimension must be positive")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[MultiIndex, GaussianRational] = {}
        for alpha, c in items:
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != dimension or any(a < 0 for a in alpha):
                raise DimensionMismatch(f"bad exponent {alpha} for d={dimension}")
            acc[alpha] = acc.get(alpha, ZERO) + as_scalar(c)
        self.dimension = dimension
        self._terms = {a: c for a, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, dimension, terms):
        # terms must already be purged of zeros
        obj = object.__new__(cls)
        obj.dimension = dimension
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, d):
        return cls._raw(d, {})

    @classmethod
    def constant(cls, d, c=1):
        c = as_scalar(c)
        return cls._raw(d, {(0,) * d: c} if c else {})

    @classmethod
    def monomial(cls, alpha, c=1):
        alpha = tuple(alpha)
        return cls(len(alpha), {alpha: c})

    @classmethod
    def variable(cls, d, j):
        """The coordinate function ``x_j`` (0-based ``j``)."""
        alpha = [0] * d
        alpha[j] = 1
        return cls._raw(d, {tuple(alpha): ONE})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Mapping[MultiIndex, GaussianRational]:
        return MappingProxyType(self._terms)

    @property
    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(a) for a in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, alpha) -> GaussianRational:
        return self._terms.get(tuple(alpha), ZERO)

    def sorted_terms(self):
        """Terms in graded order: degree ascending, then level order."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0][::-1]))

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.dimension == other.dimension and self._terms == other._terms
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self == MultiPoly.constant(self.dimension, c)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dimension, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        from .render import format_poly

        return f"MultiPoly({format_poly(self)!r})"

    # -- ring operations ----------------------------------------------------

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.dimension != self.dimension:
                raise DimensionMismatch(
                    f"dimensions differ: {self.dimension} vs {other.dimension}"
                )
            return other
        try:
            return MultiPoly.constant(self.dimension, as_scalar(other))
        except TypeError:
            return None

    def __neg__(self):
        return MultiPoly._raw(self.dimension, {a: -c for a, c in self._terms.items()})

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for a, c in other._terms.items():
            s = out.get(a)
            if s is None:
                out[a] = c
            else:
                s = s + c
                if s:
                    out[a] = s
                else:
                    del out[a]
        return MultiPoly._raw(self.dimension, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "MultiPoly":
        c = as_scalar(c)
        if not c:
            return MultiPoly.zero(self.dimension)
        return MultiPoly._raw(self.dimension, {a: c * v for a, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        other = self._lift(other)
        out: Dict[MultiIndex, GaussianRational] = {}
        for a, c in self._terms.items():
            for b, e in other._terms.items():
                k = index_add(a, b)
                out[k] = out.get(k, ZERO) + c * e
        return MultiPoly._raw(self.dimension, {a: c for a, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = MultiPoly.constant(self.dimension, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- calculus -----------------------------------------------------------

    def derivative(self, alpha: Sequence[int]) -> "MultiPoly":
        """Exact partial derivative ``D^alpha``."""
        alpha = tuple(alpha)
        if len(alpha) != self.dimension:
            raise DimensionMismatch(f"multi-index {alpha} has wrong length")
        out = {}
        for a, c in self._terms.items():
            factor = 1
            for aj, kj in zip(a, alpha):
                if kj > aj:
                    factor = 0
                    break
                # falling factorial aj (aj-1) ... (aj-kj+1)
                for t in range(kj):
                    factor *= aj - t
            if factor:
                out[tuple(aj - kj for aj, kj in zip(a, alpha))] = c * factor
        return MultiPoly._raw(self.dimension, out)

    def diff(self, j: int) -> "MultiPoly":
        """First partial derivative in variable ``j`` (0-based)."""
        out = {}
        for a, c in self._terms.items():
            if a[j]:
                b = list(a)
                b[j] -= 1
                out[tuple(b)] = c * a[j]
        return MultiPoly._raw(self.dimension, out)

    def evaluate(self, x0) -> GaussianRational:
        x0 = as_point(x0)
        if len(x0) != self.dimension:
            raise DimensionMismatch(f"point has {len(x0)} coordinates, need {self.dimension}")
        total = ZERO
        powers = [dict() for _ in x0]
        for a, c in self._terms.items():
            term = c
            for j, aj in enumerate(a):
                if aj:
                    p = powers[j].get(aj)
                    if p is None:
                        p = powers[j][aj] = x0[j] ** aj
                    term = term * p
            total = total + term
        return total

    __call__ = evaluate

    def shift(self, s) -> "MultiPoly":
        """The polynomial ``x -> self(x + s)``."""
        s = as_point(s)
        if len(s) != self.dimension:
            raise DimensionMismatch("shift vector has wrong length")
        d = self.dimension
        linear = [MultiPoly.variable(d, j) + s[j] for j in range(d)]
        out = MultiPoly.zero(d)
        for a, c in self._terms.items():
            term = MultiPoly.constant(d, c)
            for j, aj in enumerate(a):
                if aj:
                    term = term * linear[j] ** aj
            out = out + term
        return out

    # -- coefficient vectors -------------------------------------------------

    def coeff_vector(self, L: int) -> list:
        if self.degree > L:
            raise DegreeExceedsCap(f"degree {self.degree} exceeds cap {L}")
        return [self._terms.get(a, ZERO) for a in graded_set(self.dimension, L)]

    @classmethod
    def from_coeff_vector(cls, v: Sequence, d: int, L: int) -> "MultiPoly":
        n = cumulative_count(d, L)
        if len(v) != n:
            raise LengthMismatch(f"vector of length {len(v)}, expected {n}")
        terms = {}
        for alpha, c in zip(graded_set(d, L), v):
            c = as_scalar(c)
            if c:
                terms[alpha] = c
        return cls._raw(d, terms)


@dataclass(frozen=True)
class ExpPoly:
    """The function ``exp(i root.x) * poly(x)``."""

    root: Tuple[GaussianRational, ...]
    poly: MultiPoly

    def __post_init__(self):
        root = as_point(self.root)
        object.__setattr__(self, "root", root)
        if len(root) != self.poly.dimension:
            raise DimensionMismatch("root and polynomial dimensions differ")

    def __add__(self, other):
        if not isinstance(other, ExpPoly):
            return NotImplemented
        if other.root != self.root:
            raise ValueError("cannot add exponential polynomials with different roots")
        return ExpPoly(self.root, self.poly + other.poly)

    def __mul__(self, c):
        return ExpPoly(self.root, self.poly.scale(c))

    __rmul__ = __mul__


# -- functional forms ---------------------------------------------------------


def derivative(p: MultiPoly, alpha) -> MultiPoly:
    return p.derivative(alpha)


def evaluate(p: MultiPoly, x0) -> GaussianRational:
    return p.evaluate(x0)


def coeff_vector(p: MultiPoly, L: int) -> list:
    return p.coeff_vector(L)


def from_coeff_vector(v, d: int, L: int) -> MultiPoly:
    return MultiPoly.from_coeff_vector(v, d, L)


def symbol_from_operator(op: MultiPoly) -> MultiPoly:
    """Map an operator polynomial in ``D_j`` to its symbol (``D_j -> i x_j``).

    The returned ``P`` satisfies ``op(D) = P(-iD)``.
    """
    return MultiPoly._raw(
        op.dimension,
        {a: c * I ** sum(a) for a, c in op.terms.items()},
    )


def _step(r: MultiPoly, x0j: GaussianRational, j: int) -> MultiPoly:
    # (-i) D_j (e^{i x0.x} r) = e^{i x0.x} (x0_j r - i D_j r)
    return r.scale(x0j) + r.diff(j).scale(_MINUS_I)


def apply_operator(P: MultiPoly, u: ExpPoly) -> ExpPoly:
    """Apply ``P(-iD)`` to ``u``; the exponential factor is unchanged."""
    if P.dimension != u.poly.dimension:
        raise DimensionMismatch("operator and function dimensions differ")
    x0 = u.root
    d = P.dimension
    total = MultiPoly.zero(d)
    cache = {(0,) * d: u.poly}
    for gamma, c in P.sorted_terms():
        r = _apply_monomial(gamma, x0, cache)
        total = total + r.scale(c)
    return ExpPoly(x0, total)


def _apply_monomial(gamma, x0, cache):
    r = cache.get(gamma)
    if r is not None:
        return r
    # peel one step off the last non-zero coordinate
    j = max(k for k, g in enumerate(gamma) if g)
    prev = list(gamma)
    prev[j] -= 1
    r = _step(_apply_monomial(tuple(prev), x0, cache), x0[j], j)
    cache[gamma] = r
    return r


def least_nonzero_derivative_order(P: MultiPoly, x0) -> Tuple[int, MultiIndex]:
    """Smallest ``m`` with ``D^gamma P(x0) != 0`` for some ``|gamma| = m``.

    Returns ``(m, gamma)``; ``m == 0`` exactly when ``P(x0) != 0``.
    """
    if P.is_zero():
        raise ZeroPolynomial("the zero polynomial has no non-vanishing derivative")
    x0 = as_point(x0)
    for m in range(P.degree + 1):
        for gamma in level_set(P.dimension, m):
            if P.derivative(gamma).evaluate(x0):
                return m, gamma
    raise AssertionError("unreachable: a non-zero polynomial has a non-zero derivative")
