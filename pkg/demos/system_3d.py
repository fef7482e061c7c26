"""
A system of two equations in three variables
============================================

Common polynomial solutions of the 3D Laplacian and of
Dx Dy + Dx Dz + Dy Dz, found from a stacked matrix.
"""

from pdepoly import build_stacked, format_poly, parse_operator, system_solutions
from pdepoly.builder import block_range

names = ["x", "y", "z"]
P3 = parse_operator("Dx^2 + Dy^2 + Dz^2", names)
P4 = parse_operator("Dx Dy + Dx Dz + Dy Dz", names)

space = system_solutions([P3, P4], (0, 0, 0), 3)
print("dimension", space.dimension)

# Only the cubic part is interesting; lower degrees follow by differentiation.
for p in space.basis:
    if p.degree == 3:
        print("  ", format_poly(p))

# The block coupling degree-1 rows with degree-3 columns, one copy per equation.
S = build_stacked([P3, P4], (0, 0, 0), 3)
r0, r1 = block_range(3, 1)
c0, c1 = block_range(3, 3)
half = S.rows // 2
print(S.submatrix((r0, r1), (c0, c1)))
print(S.submatrix((half + r0, half + r1), (c0, c1)))
