"""Exact polynomial (times exponential) solutions of linear PDEs with constant coefficients.

The usual entry points::

    >>> from pdepoly import parse_operator, homogeneous_solutions
    >>> P = parse_operator("Dx^2 + Dy^2", ["x", "y"])
    >>> homogeneous_solutions(P, (0, 0), 3).dimension
    7
"""

from .builder import BuiltMatrix, build_block, build_full, build_stacked, derivative_row
from .combinatorics import (
    OrderedIndexSet,
    count,
    cumulative_count,
    graded_set,
    level_set,
    multi_binomial,
    position_of,
)
from .errors import (
    ArityMismatch,
    DegreeExceedsCap,
    DimensionMismatch,
    DivisionByZero,
    EmptyList,
    Inconsistent,
    LengthMismatch,
    NotInSet,
    ParseError,
    PdePolyError,
    UnknownVariable,
    ZeroPolynomial,
)
from .field import GaussianRational, arith, format_scalar, i_power, parse_scalar
from .linalg import ExactMatrix, nullspace, rank, rref, solve, span_equal
from .parser import ParseContext, parse_operator, parse_point, parse_poly
from .polynomial import (
    ExpPoly,
    MultiPoly,
    apply_operator,
    coeff_vector,
    derivative,
    evaluate,
    from_coeff_vector,
    least_nonzero_derivative_order,
    symbol_from_operator,
)
from .render import format_poly, latex_poly
from .solver import (
    DimensionReport,
    SolutionSpace,
    homogeneous_solutions,
    membership,
    predicted_dimension,
    rhs_solve,
    system_solutions,
    verify,
)

__version__ = "0.1.0"
