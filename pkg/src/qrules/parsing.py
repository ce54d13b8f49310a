"""Polynomial expression parsing and canonical printing.

Grammar (whitespace-insensitive):

    expr    := ['-'] term (('+' | '-') term)*
    term    := factor ('*' factor | <implicit q after a literal>)*
    factor  := atom ['^' nonneg-int]
    atom    := int | int '/' int | variable | '(' expr ')'

Rational literals need field coefficients; exponents are nonnegative
integer literals.  "3q^2" means "3*q^2".  The printer emits ascending
powers ("c0 + c1*q + c2*q^2"), omits zero terms, elides unit
coefficients before the variable, and prints the zero polynomial as
"0"; parse_poly(format_poly(f)) == f always.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    NegativeExponent,
    ParseError,
    RationalOverNonField,
)
from .poly import Poly
from .rings import Scalar

_NUM = "num"
_NAME = "name"
_OP = "op"
_END = "end"


def _byte_offset(text, pos):
    return len(text[:pos].encode("utf-8"))


def _tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append((_NUM, int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append((_NAME, text[i:j], i))
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append((_OP, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", _byte_offset(text, i))
    tokens.append((_END, None, n))
    return tokens


class _Parser:
    def __init__(self, text, ctx, var, max_degree):
        self.text = text
        self.ctx = ctx
        self.var = var
        self.max_degree = max_degree
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message, tok):
        raise ParseError(message, _byte_offset(self.text, tok[2]))

    def expect_op(self, ch):
        tok = self.advance()
        if tok[0] != _OP or tok[1] != ch:
            self.error(f"expected {ch!r}", tok)
        return tok

    # -- grammar -------------------------------------------------------
    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok[0] != _END:
            self.error("unexpected trailing input", tok)
        if self.max_degree is not None and value.degree > self.max_degree:
            raise ParseError(
                f"polynomial degree {value.degree} exceeds the cap "
                f"{self.max_degree}"
            )
        return value

    def expr(self):
        kind, ch, _ = self.peek()
        negate = False
        if kind == _OP and ch == "-":
            self.advance()
            negate = True
        value = self.term()
        if negate:
            value = -value
        while True:
            kind, ch, _ = self.peek()
            if kind == _OP and ch in "+-":
                self.advance()
                rhs = self.term()
                value = value + rhs if ch == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            kind, ch, _ = self.peek()
            if kind == _OP and ch == "*":
                self.advance()
                value = value * self.factor()
            elif kind == _NAME and self.tokens[self.pos - 1][0] == _NUM:
                # implicit multiplication: "3q^2"
                value = value * self.factor()
            else:
                return value

    def factor(self):
        value = self.atom()
        kind, ch, _ = self.peek()
        if kind == _OP and ch == "^":
            self.advance()
            tok = self.advance()
            if tok[0] == _OP and tok[1] == "-":
                raise NegativeExponent(
                    "exponents must be nonnegative",
                    _byte_offset(self.text, tok[2]),
                )
            if tok[0] != _NUM:
                self.error("expected a nonnegative integer exponent", tok)
            exponent = tok[1]
            if self.max_degree is not None and exponent > self.max_degree:
                raise ParseError(
                    f"exponent {exponent} exceeds the cap {self.max_degree}",
                    _byte_offset(self.text, tok[2]),
                )
            value = value**exponent
        return value

    def atom(self):
        tok = self.advance()
        kind, val, start = tok
        if kind == _NUM:
            nxt = self.peek()
            if nxt[0] == _OP and nxt[1] == "/":
                if not self.ctx.is_field:
                    raise RationalOverNonField(
                        f"rational literals need a field, not {self.ctx}",
                        _byte_offset(self.text, nxt[2]),
                    )
                self.advance()
                den_tok = self.advance()
                if den_tok[0] != _NUM:
                    self.error("expected an integer denominator", den_tok)
                if den_tok[1] == 0:
                    self.error("zero denominator", den_tok)
                value = Fraction(val, den_tok[1])
                return Poly([self.ctx.coerce(value)], self.ctx, self.var)
            return Poly([self.ctx.coerce(val)], self.ctx, self.var)
        if kind == _NAME:
            if val != self.var:
                self.error(f"unknown symbol {val!r}", tok)
            return Poly.variable(self.ctx, self.var)
        if kind == _OP and val == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        self.error("expected a number, the variable, or '('", tok)


def parse_poly(text, ctx, var="q", max_degree=None):
    """Parse text into an exact polynomial over ctx."""
    return _Parser(text, ctx, var, max_degree).parse()


def parse_scalar(text, ctx):
    """Parse a constant expression (e.g. "-2", "1/2") into a Scalar."""
    f = parse_poly(text, ctx)
    if f.degree > 0:
        raise ParseError(f"expected a constant, got degree {f.degree}")
    return Scalar(f[0] if f else 0, ctx)


def _split_sign(c):
    """Return ("+"/"-", magnitude string) for a raw coefficient."""
    if isinstance(c, Poly):
        s = format_poly(c)
        return "+", s if s == "1" else f"({s})"
    if isinstance(c, (int, Fraction)) and c < 0:
        return "-", str(-c)
    return "+", str(c)


def format_poly(f):
    """Canonical ascending-power text; inverse of parse_poly."""
    if not f:
        return "0"
    parts = []
    for k, c in enumerate(f.coeffs):
        if not c:
            continue
        sign, mag = _split_sign(c)
        if k == 0:
            body = mag
        else:
            power = f.var if k == 1 else f"{f.var}^{k}"
            body = power if mag == "1" else f"{mag}*{power}"
        parts.append((sign, body))
    sign, body = parts[0]
    pieces = [body if sign == "+" else f"-{body}"]
    for sign, body in parts[1:]:
        pieces.append(f" {sign} {body}")
    return "".join(pieces)


def format_scalar(value):
    """Text form of a raw ring element or Scalar."""
    if isinstance(value, Scalar):
        value = value.value
    sign, mag = _split_sign(value)
    return mag if sign == "+" else f"-{mag}"


def format_ratfunc(rf):
    """Text form "num / den" of a rational function; plain polynomial
    text when the denominator is one."""
    num = format_poly(rf.num)
    if rf.den.degree == 0:
        return num
    return f"({num}) / ({format_poly(rf.den)})"
