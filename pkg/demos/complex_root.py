"""
Expanding about a complex root
==============================

The Laplace symbol -x^2 - y^2 also vanishes at (1, i). Solutions there
carry the factor exp(ix - y). Shifting the operator moves the root but
leaves the matrix unchanged.
"""

from pdepoly import build_full, homogeneous_solutions, parse_operator
from pdepoly.field import I
from pdepoly.render import format_poly, format_space

names = ["x", "y"]
P = parse_operator("Dx^2 + Dy^2", names)
space = homogeneous_solutions(P, (1, I), 3)
print(format_space(space, names))

# (Dx - 1)^2 + (Dy - i)^2 has symbol P(x + s) with s = (i, -1), so every
# root moves by -s. The origin lands on (-i, 1).
shifted = parse_operator("(Dx - I)^2 + (Dy - i I)^2", names)
print("shifted symbol:", format_poly(shifted))
same = build_full(shifted, (-I, 1), 3).matrix == build_full(P, (0, 0), 3).matrix
print("same matrix as the Laplacian at the origin:", same)
