"""
Helmholtz with a polynomial right-hand side
===========================================

Solve (Dx^2 + Dy^2 - 1) u = exp(i x0.x) F for F = 2 + 3x - 2xy + y^2,
first off the characteristic set, then at the root (i, 0).
"""

from pdepoly import parse_operator, parse_poly, rhs_solve, verify
from pdepoly.field import I
from pdepoly.render import format_space

names = ["x", "y"]
P = parse_operator("Dx^2 + Dy^2 - I", names)
F = parse_poly("2 + 3x - 2x y + y^2", names)

# P(0, 0) = -1: the matrix is invertible and the answer is unique.
s0 = rhs_solve(P, F, (0, 0))
print(format_space(s0, names))

# (i, 0) is a root of order 1, so the default cap is deg F + 1 = 3 and a
# four-dimensional homogeneous family comes along.
s1 = rhs_solve(P, F, (I, 0))
print(format_space(s1, names))

# Both answers are re-checked by direct differentiation.
print(verify(s0, P, F), verify(s1, P, F))
