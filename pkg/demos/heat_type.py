"""
A heat-type operator
====================

The operator Dx^2 - Dy is first order in y, so its polynomial solutions
grow more slowly than those of the Laplacian.
"""

from pdepoly import format_poly, homogeneous_solutions, parse_operator, predicted_dimension

P = parse_operator("Dx^2 - Dy", ["x", "y"])
print("symbol:", format_poly(P))

space = homogeneous_solutions(P, (0, 0), 3)
for p in space.basis:
    print("  ", format_poly(p))

# The gradient of P at the origin is non-zero, so the least order is 1 and
# the dimension is (monomials of degree <= 3) - (monomials of degree <= 2),
# that is 10 - 6 = 4. It grows by one per degree.
report = predicted_dimension(P, (0, 0), 3)
print(report)

for L in range(6):
    print(L, predicted_dimension(P, (0, 0), L).computed)
