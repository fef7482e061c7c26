"""Text front end: polynomials, constant-coefficient operators and points.

Grammar (precedence high to low)::

    atom    := integer | "i" | variable | "D"variable | "I" | "(" expr ")"
    power   := atom ["^" power]            (exponent: non-negative integer constant)
    unary   := "-" unary | power
    product := unary (("*" | "/" | <juxtaposition>) unary)*
    expr    := product (("+" | "-") product)*

Division is only allowed by a non-zero constant, so ``3/2 x`` is ``(3/2) x``.
``i`` is always the imaginary unit. In operator mode ``Dx`` is the partial
derivative in ``x`` and ``I`` the identity operator; the result is converted
to the operator's symbol, i.e. the ``P`` with ``operator = P(-iD)``.

    >>> ctx = ParseContext(("x", "y"))
    >>> parse_poly("-x^2 - i y", ctx) == parse_operator("Dx^2 - Dy", ctx)
    True
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple

from .errors import ArityMismatch, ParseError, UnknownVariable
from .field import I, GaussianRational, parse_scalar
from .polynomial import MultiPoly, symbol_from_operator

__all__ = [
    "ParseContext",
    "default_variables",
    "parse_poly",
    "parse_operator",
    "parse_point",
]

_RESERVED = {"i", "I"}


def default_variables(d: int) -> Tuple[str, ...]:
    """``x, y, z`` for up to three variables, else ``x1 .. xd``."""
    if d < 1:
        raise ValueError("dimension must be positive")
    if d <= 3:
        return ("x", "y", "z")[:d]
    return tuple(f"x{j}" for j in range(1, d + 1))


@dataclass(frozen=True)
class ParseContext:
    variables: Tuple[str, ...]
    mode: str = "symbol"

    def __post_init__(self):
        names = tuple(self.variables)
        object.__setattr__(self, "variables", names)
        if not names:
            raise ValueError("at least one variable is required")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for v in names:
            if v in _RESERVED:
                raise ValueError(f"{v!r} is reserved and cannot be a variable name")
            if not (v[0].isalpha() or v[0] == "_") or not all(ch.isalnum() or ch == "_" for ch in v):
                raise ValueError(f"invalid variable name {v!r}")
        if self.mode not in ("symbol", "operator"):
            raise ValueError(f"unknown mode {self.mode!r}")

    @property
    def d(self) -> int:
        return len(self.variables)


class Token(NamedTuple):
    kind: str  # num, var, dvar, imag, ident, op, end
    value: object
    pos: int


_OPS = "+-*/^(),"


def _tokenize(text: str, ctx: ParseContext) -> List[Token]:
    names = []
    for j, v in enumerate(ctx.variables):
        names.append((v, "var", j))
        if ctx.mode == "operator":
            names.append(("D" + v, "dvar", j))
    names.append(("i", "imag", None))
    if ctx.mode == "operator":
        names.append(("I", "ident", None))
    names.sort(key=lambda t: -len(t[0]))

    tokens = []
    pos, n = 0, len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch.isdigit():
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            tokens.append(Token("num", int(text[start:pos]), start))
        elif ch in _OPS or ch == "−":
            tokens.append(Token("op", "-" if ch == "−" else ch, pos))
            pos += 1
        elif ch.isalpha() or ch == "_":
            for name, kind, j in names:
                if text.startswith(name, pos):
                    tokens.append(Token(kind, j, pos))
                    pos += len(name)
                    break
            else:
                end = pos
                while end < n and (text[end].isalnum() or text[end] == "_"):
                    end += 1
                raise UnknownVariable(
                    f"unknown name {text[pos:end]!r}", text, pos,
                    [nm for nm, _, _ in names],
                )
        else:
            raise ParseError(f"unexpected character {ch!r}", text, pos)
    tokens.append(Token("end", None, n))
    return tokens


_BINARY_BP = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 40}
_JUXTAPOSE_BP = 20
_UNARY_BP = 30
_ATOM_START = ("num", "var", "dvar", "imag", "ident")
_ATOM_EXPECTED = ("number", "variable", "i", "(", "-")


class _Parser:
    def __init__(self, text: str, ctx: ParseContext):
        self.text = text
        self.ctx = ctx
        self.tokens = _tokenize(text, ctx)
        self.k = 0

    def peek(self) -> Token:
        return self.tokens[self.k]

    def advance(self) -> Token:
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def error(self, message, tok: Token, expected=()):
        raise ParseError(message, self.text, tok.pos, expected)

    def parse(self) -> MultiPoly:
        if self.peek().kind == "end":
            self.error("empty expression", self.peek(), _ATOM_EXPECTED)
        result = self.expr(0)
        tok = self.peek()
        if tok.kind != "end":
            self.error("unexpected token", tok, ("operator", "end of input"))
        return result

    def expr(self, rbp: int) -> MultiPoly:
        left = self.nud(self.advance())
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.value in _BINARY_BP:
                lbp = _BINARY_BP[tok.value]
            elif tok.kind in _ATOM_START or (tok.kind == "op" and tok.value == "("):
                lbp = _JUXTAPOSE_BP
            else:
                break
            if lbp <= rbp:
                break
            left = self.led(tok, left, lbp)
        return left

    def nud(self, tok: Token) -> MultiPoly:
        d = self.ctx.d
        kind = tok.kind
        if kind == "num":
            return MultiPoly.constant(d, tok.value)
        if kind == "imag":
            return MultiPoly.constant(d, I)
        if kind == "ident":
            return MultiPoly.constant(d, 1)
        if kind == "dvar":
            return MultiPoly.variable(d, tok.value)
        if kind == "var":
            if self.ctx.mode == "operator":
                name = self.ctx.variables[tok.value]
                raise ParseError(
                    f"variable {name!r} cannot appear in a constant-coefficient operator",
                    self.text, tok.pos, ["D" + v for v in self.ctx.variables] + ["I"],
                )
            return MultiPoly.variable(d, tok.value)
        if kind == "op" and tok.value == "(":
            inner = self.expr(0)
            close = self.advance()
            if close.kind != "op" or close.value != ")":
                self.error("unbalanced parenthesis", close, (")",))
            return inner
        if kind == "op" and tok.value == "-":
            return -self.expr(_UNARY_BP)
        if kind == "op" and tok.value == "+":
            return self.expr(_UNARY_BP)
        if kind == "end":
            self.error("unexpected end of input", tok, _ATOM_EXPECTED)
        self.error(f"unexpected {tok.value!r}", tok, _ATOM_EXPECTED)

    def led(self, tok: Token, left: MultiPoly, lbp: int) -> MultiPoly:
        if tok.kind != "op" or tok.value == "(":
            return left * self.expr(lbp)
        self.advance()
        op = tok.value
        if op == "+":
            return left + self.expr(lbp)
        if op == "-":
            return left - self.expr(lbp)
        if op == "*":
            return left * self.expr(lbp)
        if op == "/":
            start = self.peek()
            right = self.expr(lbp)
            c = _constant_value(right)
            if c is None or not c:
                self.error("can only divide by a non-zero constant", start)
            return left.scale(c.inverse())
        if op == "^":
            start = self.peek()
            right = self.expr(lbp - 1)
            c = _constant_value(right)
            if c is None or c.im or c.re.denominator != 1 or c.re < 0:
                self.error("exponent must be a non-negative integer", start, ("integer",))
            return left ** int(c.re)
        self.error(f"unexpected operator {op!r}", tok)


def _constant_value(p: MultiPoly) -> Optional[GaussianRational]:
    if p.degree > 0:
        return None
    return p.coefficient((0,) * p.dimension)


def parse_poly(text: str, ctx: ParseContext | Sequence[str]) -> MultiPoly:
    """Parse a polynomial in the variables of ``ctx``."""
    if not isinstance(ctx, ParseContext):
        ctx = ParseContext(tuple(ctx))
    if ctx.mode != "symbol":
        ctx = ParseContext(ctx.variables, "symbol")
    return _Parser(text, ctx).parse()


def parse_operator(text: str, ctx: ParseContext | Sequence[str]) -> MultiPoly:
    """Parse an operator such as ``"Dx^2 + Dy^2 - I"`` and return its symbol."""
    if not isinstance(ctx, ParseContext):
        ctx = ParseContext(tuple(ctx), "operator")
    if ctx.mode != "operator":
        ctx = ParseContext(ctx.variables, "operator")
    return symbol_from_operator(_Parser(text, ctx).parse())


def parse_point(text: str, d: Optional[int] = None) -> Tuple[GaussianRational, ...]:
    """Parse ``"(1, i)"`` into a tuple of scalars; ``d`` checks the arity."""
    stripped = text.strip()
    offset = len(text) - len(text.lstrip())
    if stripped.startswith("("):
        if not stripped.endswith(")"):
            raise ParseError("missing closing parenthesis", text, len(text.rstrip()), (")",))
        body, offset = stripped[1:-1], offset + 1
    else:
        body = stripped
    if not body.strip():
        raise ParseError("empty point", text, offset, ("scalar",))
    coords = []
    for piece in body.split(","):
        try:
            coords.append(parse_scalar(piece))
        except ParseError as exc:
            raise ParseError(
                exc.message, text, offset + exc.position, exc.expected
            ) from None
        offset += len(piece) + 1
    if d is not None and len(coords) != d:
        raise ArityMismatch(f"point has {len(coords)} coordinates, expected {d}")
    return tuple(coords)

