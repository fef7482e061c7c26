"""Exception hierarchy shared by all pdepoly modules."""


class PdePolyError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(PdePolyError, ZeroDivisionError):
    pass


class ParseError(PdePolyError, ValueError):
    """Malformed textual input.

    ``position`` is a 0-based byte offset into ``text``; ``line`` and
    ``column`` are 1-based and derived from it.
    """

    def __init__(self, message, text="", position=0, expected=()):
        self.message = message
        self.text = text
        self.position = position
        self.expected = tuple(sorted(set(expected)))
        before = text[:position]
        self.line = before.count("\n") + 1
        self.column = position - (before.rfind("\n") + 1) + 1
        detail = f"{message} at line {self.line}, column {self.column}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class UnknownVariable(ParseError):
    pass


class ArityMismatch(PdePolyError, ValueError):
    pass


class DimensionMismatch(PdePolyError, ValueError):
    pass


class NotInSet(PdePolyError, KeyError):
    pass


class DegreeExceedsCap(PdePolyError, ValueError):
    pass


class LengthMismatch(PdePolyError, ValueError):
    pass


class ZeroPolynomial(PdePolyError, ValueError):
    pass


class EmptyList(PdePolyError, ValueError):
    pass


class Inconsistent(PdePolyError, ArithmeticError):
    """A linear system ``M v = b`` with rank(M) < rank([M | b])."""
