"""Polynomial-times-exponential solutions of constant-coefficient PDEs.

A PDE ``P(-iD) u = 0`` (or a system of them) is solved on the ansatz
``u = exp(i x0.x) p(x)`` with ``deg p <= L`` by taking the null-space of the
derivative matrix of ``P`` at ``x0``; a right-hand side ``exp(i x0.x) F(x)``
turns this into a linear solve with ``F``'s coefficient vector, padded with
zeros, on the right.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from .builder import build_full, build_stacked
from .combinatorics import cumulative_count
from .errors import DegreeExceedsCap, DimensionMismatch, EmptyList, ZeroPolynomial
from .field import GaussianRational
from .linalg import ExactMatrix, in_column_span, nullspace, solve
from .polynomial import (
    ExpPoly,
    MultiPoly,
    apply_operator,
    as_point,
    least_nonzero_derivative_order,
)

__all__ = [
    "SolutionSpace",
    "DimensionReport",
    "Verification",
    "homogeneous_solutions",
    "system_solutions",
    "rhs_solve",
    "predicted_dimension",
    "verify",
    "membership",
    "default_degree_cap",
]


@dataclass(frozen=True)
class SolutionSpace:
    """Every ``exp(i root.x) * (particular + sum c_j basis_j)`` is a solution."""

    root: Tuple[GaussianRational, ...]
    degree_cap: int
    basis: Tuple[MultiPoly, ...]
    particular: Optional[MultiPoly] = None
    notes: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "root", as_point(self.root))
        object.__setattr__(self, "basis", tuple(self.basis))
        object.__setattr__(self, "notes", tuple(self.notes))

    @property
    def d(self) -> int:
        return len(self.root)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> ExactMatrix:
        """Coefficient vectors of the basis as columns (graded order, cap ``degree_cap``)."""
        n = cumulative_count(self.d, self.degree_cap)
        return ExactMatrix.from_columns(
            [b.coeff_vector(self.degree_cap) for b in self.basis], rows=n
        )


@dataclass(frozen=True)
class DimensionReport:
    L: int
    least_order: int
    predicted: int
    computed: int

    @property
    def consistent(self) -> bool:
        return self.predicted == self.computed


@dataclass(frozen=True)
class Verification:
    """Outcome of :func:`verify`; truthy when everything checked out."""

    ok: bool
    message: str = ""

    def __bool__(self):
        return self.ok


def _require_nonzero(*Ps):
    for P in Ps:
        if P.is_zero():
            raise ZeroPolynomial("the zero polynomial defines no equation")


def _space_from_kernel(kernel: ExactMatrix, x0, L, particular=None, notes=()):
    d = len(x0)
    basis = tuple(MultiPoly.from_coeff_vector(c, d, L) for c in kernel.columns())
    return SolutionSpace(x0, L, basis, particular, notes)


def homogeneous_solutions(P: MultiPoly, x0, L: int) -> SolutionSpace:
    """All ``exp(i x0.x) p`` with ``deg p <= L`` annihilated by ``P(-iD)``.

    The basis is empty (not an error) when ``P(x0) != 0``.
    """
    _require_nonzero(P)
    x0 = as_point(x0)
    kernel = nullspace(build_full(P, x0, L).matrix)
    notes = ("P(x0) != 0: only the trivial solution",) if P.evaluate(x0) else ()
    return _space_from_kernel(kernel, x0, L, notes=notes)


def system_solutions(Ps: Sequence[MultiPoly], x0, L: int) -> SolutionSpace:
    """Common solutions of ``P_n(-iD) u = 0`` for every ``P_n`` in ``Ps``."""
    Ps = list(Ps)
    if not Ps:
        raise EmptyList("need at least one polynomial")
    _require_nonzero(*Ps)
    x0 = as_point(x0)
    kernel = nullspace(build_stacked(Ps, x0, L))
    notes = ()
    if any(P.evaluate(x0) for P in Ps):
        notes = ("x0 is not a common root: only the trivial solution",)
    return _space_from_kernel(kernel, x0, L, notes=notes)


def default_degree_cap(P: MultiPoly, F: MultiPoly, x0) -> int:
    """``deg F + m`` where ``m`` is the least order of a non-vanishing derivative."""
    m, _ = least_nonzero_derivative_order(P, x0)
    return max(F.degree, 0) + m


def rhs_solve(P: MultiPoly, F: MultiPoly, x0, L: Optional[int] = None) -> SolutionSpace:
    """Solve ``P(-iD) (exp(i x0.x) p) = exp(i x0.x) F`` for ``deg p <= L``.

    ``L`` defaults to :func:`default_degree_cap`, the smallest cap for which
    the linear system is guaranteed consistent. A caller-supplied smaller cap
    may raise :class:`~pdepoly.errors.Inconsistent`.
    """
    _require_nonzero(P)
    if P.dimension != F.dimension:
        raise DimensionMismatch("P and F must have the same number of variables")
    x0 = as_point(x0)
    if L is None:
        L = default_degree_cap(P, F, x0)
    elif L < F.degree:
        raise DegreeExceedsCap(f"cap {L} is below deg F = {F.degree}")
    M = build_full(P, x0, L).matrix
    particular, kernel = solve(M, F.coeff_vector(L))
    d = len(x0)
    p = MultiPoly.from_coeff_vector(particular, d, L)
    notes = ("unique solution",) if kernel.cols == 0 else ()
    return _space_from_kernel(kernel, x0, L, particular=p, notes=notes)


def predicted_dimension(P: MultiPoly, x0, L: int) -> DimensionReport:
    """Closed-form solution-space dimension next to the computed one."""
    _require_nonzero(P)
    m, _ = least_nonzero_derivative_order(P, x0)
    d = P.dimension
    if m == 0:
        predicted = 0
    elif L >= m:
        predicted = cumulative_count(d, L) - cumulative_count(d, L - m)
    else:
        predicted = cumulative_count(d, L)
    computed = homogeneous_solutions(P, x0, L).dimension
    return DimensionReport(L, m, predicted, computed)


def verify(space: SolutionSpace, Ps, F: Optional[MultiPoly] = None) -> Verification:
    """Re-check ``space`` against ``P(-iD)`` by direct differentiation.

    Every basis element must be annihilated by every ``P``. When both
    ``space.particular`` and ``F`` are given the particular solution must map
    to ``F`` exactly.
    """
    if isinstance(Ps, MultiPoly):
        Ps = [Ps]
    root = space.root
    for n, P in enumerate(Ps):
        if P.dimension != space.d:
            return Verification(False, f"operator {n} has {P.dimension} variables, space has {space.d}")
        for j, b in enumerate(space.basis):
            residual = apply_operator(P, ExpPoly(root, b)).poly
            if residual:
                return Verification(
                    False, f"basis element {j} is not annihilated by operator {n}: residual {residual!r}"
                )
        if F is not None and space.particular is not None:
            image = apply_operator(P, ExpPoly(root, space.particular)).poly
            if image != F:
                return Verification(
                    False, f"particular solution maps to {image!r} under operator {n}, expected {F!r}"
                )
    return Verification(True, "ok")


def membership(space: SolutionSpace, q: MultiPoly) -> bool:
    """True iff ``q`` lies in ``particular + span(basis)``."""
    if q.degree > space.degree_cap:
        raise DegreeExceedsCap(f"degree {q.degree} exceeds cap {space.degree_cap}")
    if space.particular is not None:
        q = q - space.particular
    if not space.basis:
        return q.is_zero()
    return in_column_span(space.basis_matrix(), q.coeff_vector(space.degree_cap))

