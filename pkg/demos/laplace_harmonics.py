"""
Harmonic polynomials from a null-space
======================================

Polynomial solutions of the 2D Laplace equation up to degree 3,
read off the kernel of one exact 10x10 matrix.
"""

from pdepoly import build_full, format_poly, homogeneous_solutions, parse_operator
from pdepoly.linalg import rank

# The operator is typed with derivative tokens; the library keeps its
# symbol P, with the operator equal to P(-iD).
P = parse_operator("Dx^2 + Dy^2", ["x", "y"])
print("symbol:", format_poly(P))

# Expanding about the origin (a root of P) with degree cap 3 gives
# the matrix whose kernel holds the coefficient vectors.
M = build_full(P, (0, 0), 3).matrix
print(M)
print("rank", rank(M), "of", M.cols)

# Each kernel column becomes a polynomial in graded order.
space = homogeneous_solutions(P, (0, 0), 3)
for p in space.basis:
    print("  ", format_poly(p))

# Seven of them: 1, x, y and two harmonics in each degree 2 and 3.
print("dimension", space.dimension)
