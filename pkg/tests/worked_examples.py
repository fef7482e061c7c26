"""Polynomials, points and matrices transcribed from the worked examples."""

from pdepoly import ExactMatrix, ParseContext, parse_operator, parse_poly
from pdepoly.field import GaussianRational

XY = ParseContext(("x", "y"))
XYZ = ParseContext(("x", "y", "z"))

i = GaussianRational(0, 1)

P1 = parse_poly("-x^2 - y^2", XY)
P2 = parse_poly("-x^2 - i y", XY)
P3 = parse_poly("-x^2 - y^2 - z^2", XYZ)
P4 = parse_poly("-x y - x z - y z", XYZ)
P5 = parse_poly("-x^2 - y^2 - 1", XY)
P_SHIFTED = parse_poly("(i x - 1)^2 + (i y - i)^2", XY)
F_HELMHOLTZ = parse_poly("2 + 3x - 2x y + y^2", XY)
F_POISSON = parse_poly("3 + x - 2y", XY)


def polys(texts, ctx=XY):
    return [parse_poly(t, ctx) for t in texts]


EX1_BASIS = polys(["1", "x", "y", "x y", "y^2 - x^2", "3x y^2 - x^3", "y^3 - 3x^2 y"])
EX2_BASIS = polys(["1", "x", "x^2 + 2y", "x^3 + 6x y"])
EX3_CUBICS = polys(
    [
        "3x^2 y - 3x^2 z - y^3 + z^3",
        "-x^3 + 3x^2 y + 3x y^2 - 6x y z - 2y^3 + 3y z^2",
        "-2x^3 + 3x^2 y + 3x y^2 - 6x y z + 3x z^2 - y^3",
        "x^3 + 3x^2 y - 3x^2 z - 3x y^2 - y^3 + 3y^2 z",
    ],
    XYZ,
)
EX4_BASIS = polys(["1", "x + i y", "x^2 + 2i x y - y^2", "x^3 + 3i x^2 y - 3x y^2 - i y^3"])
EX6_SOLUTION = parse_poly("2x y - 3x - y^2 - 4", XY)
EX7_PARTICULAR_PRINTED = parse_poly("-x^2 y/2 + x^2 + x y^2/2 - x y/2 - 2y^2", XY)
EX7_HOMOGENEOUS = polys(["3x y + y^3", "x + y^2", "y", "1"])
EX8_SOLUTION = parse_poly("-x/2 + y - (3/2 - i/2)", XY)


def _m(rows):
    # entries may be ints or scalar strings such as "-2i"
    return ExactMatrix(rows)


_Z = [0] * 10

LAPLACE_MATRIX = _m(
    [
        [0, 0, 0, 2, 0, 2, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 6, 0, 2, 0],
        [0, 0, 0, 0, 0, 0, 0, 2, 0, 6],
    ]
    + [_Z] * 7
)

EX2_MATRIX = _m(
    [
        [0, 0, -1, 2, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, -1, 0, 6, 0, 0, 0],
        [0, 0, 0, 0, 0, -2, 0, 2, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, -1, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, -2, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, -3],
    ]
    + [_Z] * 4
)

EX4_MATRIX_PRINTED = _m(
    [
        [0, "-2i", 2, -2, 0, -2, 0, 0, 0, 0],
        [0, 0, 0, "-4i", 2, 0, -6, 0, -2, 0],
        [0, 0, 0, 0, "-2i", 4, 0, -2, 0, -6],
        [0, 0, 0, 0, 0, 0, "-6i", 2, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, "-4i", 4, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, "-2i", 6],
    ]
    + [_Z] * 4
)

EX3_STACKED_BLOCK = _m(
    [
        [6, 0, 2, 0, 0, 0, 0, 2, 0, 0],
        [0, 2, 0, 6, 0, 0, 0, 0, 2, 0],
        [0, 0, 0, 0, 2, 0, 2, 0, 0, 6],
        [0, 2, 0, 0, 2, 1, 0, 0, 0, 0],
        [0, 0, 2, 0, 0, 1, 2, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 2, 2, 0],
    ]
)

HELMHOLTZ_ORIGIN_MATRIX = _m(
    [
        [-1, 0, 0, 2, 0, 2],
        [0, -1, 0, 0, 0, 0],
        [0, 0, -1, 0, 0, 0],
        [0, 0, 0, -1, 0, 0],
        [0, 0, 0, 0, -1, 0],
        [0, 0, 0, 0, 0, -1],
    ]
)

POISSON_MATRIX = _m([[-2, "2i", "2i"], [0, -2, 0], [0, 0, -2]])

OPERATOR_TEXTS = {
    "L1": ("Dx^2 + Dy^2", XY, P1),
    "L2": ("Dx^2 - Dy", XY, P2),
    "L3": ("Dx^2 + Dy^2 + Dz^2", XYZ, P3),
    "L4": ("Dx Dy + Dx Dz + Dy Dz", XYZ, P4),
    "L5": ("Dx^2 + Dy^2 - I", XY, P5),
    "L5_shifted": ("(Dx - I)^2 + (Dy - i I)^2", XY, P_SHIFTED),
}


def operator(name):
    text, ctx, _ = OPERATOR_TEXTS[name]
    return parse_operator(text, ctx)
