"""
Poisson's equation at a non-root
================================

Find p with (Dx^2 + Dy^2)(exp(ix + iy) p) = exp(ix + iy)(3 + x - 2y).
The symbol is -2 at (1, 1), so the answer is a single polynomial.
"""

from pdepoly import build_full, format_poly, parse_operator, parse_poly, rhs_solve

names = ["x", "y"]
P = parse_operator("Dx^2 + Dy^2", names)
F = parse_poly("3 + x - 2y", names)

# A degree cap of 1 is enough: the 3x3 matrix is upper triangular with -2
# on the diagonal.
print(build_full(P, (1, 1), 1).matrix)

space = rhs_solve(P, F, (1, 1))
print("cap", space.degree_cap)
print("u = exp(ix + iy) *", format_poly(space.particular))
