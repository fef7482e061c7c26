"""Exact scalars in the Gaussian rationals Q(i).

Real and imaginary parts are :class:`fractions.Fraction`, which already keeps
numerator and denominator coprime with a positive denominator, so every value
is canonical as soon as it is built.

    >>> a = GaussianRational(1, 1)
    >>> a * a.conjugate()
    GaussianRational('2')
    >>> parse_scalar("3/2-1/2i")
    GaussianRational('3/2-1/2i')
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import DivisionByZero, ParseError

__all__ = [
    "GaussianRational",
    "ZERO",
    "ONE",
    "I",
    "arith",
    "i_power",
    "format_scalar",
    "parse_scalar",
    "as_scalar",
]

Rational = Fraction

_MINUS_SIGNS = "-−"


class GaussianRational:
    """Complex number ``re + im*i`` with rational parts. Immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            re, im = re.re, re.im + Fraction(im)
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    @classmethod
    def _make(cls, re, im):
        # trusted constructor: both parts are already Fractions
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational, (self.re, self.im))

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return not self.re and not self.im

    def is_real(self):
        return not self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, _RationalABC)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self):
        return GaussianRational._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational._make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational._make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b:
            if not d:
                return GaussianRational._make(a * c, d)
            return GaussianRational._make(a * c, a * d)
        if not d:
            return GaussianRational._make(a * c, b * c)
        return GaussianRational._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self):
        a, b = self.re, self.im
        if not b:
            if not a:
                raise DivisionByZero("inverse of zero")
            return GaussianRational._make(1 / a, b)
        norm = a * a + b * b
        return GaussianRational._make(a / norm, -b / norm)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other.im:
            if not other.re:
                raise DivisionByZero("division by zero")
            return GaussianRational._make(self.re / other.re, self.im / other.re)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self):
        return GaussianRational._make(self.re, -self.im)

    def norm(self):
        """Squared modulus ``re^2 + im^2``."""
        return self.re * self.re + self.im * self.im

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _coerce(value):
    if type(value) is GaussianRational:
        return value
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, _RationalABC)):
        return GaussianRational._make(Fraction(value), Fraction(0))
    return None


def as_scalar(value) -> GaussianRational:
    """Coerce ints, Fractions, scalar strings or GaussianRationals."""
    if isinstance(value, str):
        return parse_scalar(value)
    out = _coerce(value)
    if out is None:
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")
    return out


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)

_I_POWERS = {
    "+": (ONE, I, -ONE, -I),
    "-": (ONE, -I, -ONE, I),
}


def arith(a, b, op):
    """Apply ``op`` in {'add', 'sub', 'mul', 'div'} to two scalars."""
    a, b = as_scalar(a), as_scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def i_power(k: int, sign: str = "+") -> GaussianRational:
    """Return ``(+i)**k`` or ``(-i)**k`` for ``k >= 0``."""
    if sign == "−":
        sign = "-"
    if k < 0:
        raise ValueError("exponent must be non-negative")
    return _I_POWERS[sign][k % 4]


def _imag_text(c: Fraction) -> str:
    if c == 1:
        return "i"
    if c == -1:
        return "-i"
    return f"{c}i"


def format_scalar(a: GaussianRational) -> str:
    """Render ``a`` in the exact grammar accepted by :func:`parse_scalar`."""
    re, im = a.re, a.im
    if not im:
        return str(re)
    if not re:
        return _imag_text(im)
    sign = "+" if im > 0 else "-"
    return f"{re}{sign}{_imag_text(abs(im))}"


class _ScalarScanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message, expected=()):
        raise ParseError(message, self.text, self.pos, expected)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def sign(self):
        ch = self.peek()
        if ch and ch in _MINUS_SIGNS:
            self.pos += 1
            return -1
        if ch == "+":
            self.pos += 1
            return 1
        return None

    def digits(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected digits", ("integer",))
        return int(self.text[start:self.pos])

    def rational(self):
        num = self.digits()
        if self.peek() == "/":
            self.pos += 1
            den_pos = self.pos
            den = self.digits()
            if den == 0:
                self.pos = den_pos
                self.error("zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def magnitude(self):
        """Return (value, is_imaginary) for ``rational``, ``rational i`` or ``i``."""
        self.skip_ws()
        if self.peek() == "i":
            self.pos += 1
            return Fraction(1), True
        if not self.peek().isdigit():
            self.error("expected a number or 'i'", ("integer", "i"))
        value = self.rational()
        self.skip_ws()
        if self.peek() == "i":
            self.pos += 1
            return value, True
        return value, False


def parse_scalar(text: str) -> GaussianRational:
    """Parse ``"-2"``, ``"3/2-1/2i"``, ``"i"``, ``"1/2 i"`` and similar.

    Raises :class:`ParseError` carrying the offending offset.
    """
    sc = _ScalarScanner(text)
    sc.skip_ws()
    s1 = sc.sign() or 1
    v1, imag1 = sc.magnitude()
    re = im = Fraction(0)
    if imag1:
        im = s1 * v1
    else:
        re = s1 * v1
    sc.skip_ws()
    if not imag1 and sc.peek():
        s2 = sc.sign()
        if s2 is None:
            sc.error("unexpected character", ("+", "-", "end of input"))
        v2, imag2 = sc.magnitude()
        if not imag2:
            sc.error("expected imaginary part", ("i",))
        im = s2 * v2
        sc.skip_ws()
    if sc.peek():
        sc.error("unexpected trailing input", ("end of input",))
    return GaussianRational._make(re, im)
