"""Recursive-descent parser for ring expressions.

Grammar (left associative, explicit multiplication only):

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := ['-'] atom ['^' nat]
    atom   := nat | 'xi' | 'h' | 'q1' | 'q2' | '(' expr ')'

Exponentiation binds tighter than unary minus, so -xi^2 is -(xi^2).  The
unicode letter ξ is accepted as an alias for xi on input; printed output is
always ASCII.  Error offsets are byte offsets into the UTF-8 encoding of the
input so they stay meaningful for tooling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import (
    ExpressionSyntaxError,
    NegativeExponentError,
    UnknownIdentifierError,
)
from .poly import Polynomial, VARIABLES

__all__ = [
    "Lit",
    "Var",
    "Neg",
    "Pow",
    "BinOp",
    "Expression",
    "parse_expression",
    "to_polynomial",
    "parse_polynomial",
]


@dataclass(frozen=True)
class Lit:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expression"


@dataclass(frozen=True)
class Pow:
    base: "Expression"
    exponent: int


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-' or '*'
    left: "Expression"
    right: "Expression"


Expression = Union[Lit, Var, Neg, Pow, BinOp]


@dataclass(frozen=True)
class _Token:
    kind: str  # 'nat', 'ident', '+', '-', '*', '^', '(', ')', 'end'
    text: str
    offset: int  # byte offset in the UTF-8 input


_ATOM_EXPECTED = ("integer", "'xi'", "'h'", "'q1'", "'q2'", "'('")


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    data = text.encode("utf-8")
    i = 0
    pos = 0  # byte position
    while i < len(text):
        ch = text[i]
        width = len(ch.encode("utf-8"))
        if ch.isspace():
            i += 1
            pos += width
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("nat", text[i:j], pos))
            pos += j - i
            i = j
            continue
        if ch == "ξ":  # ξ
            tokens.append(_Token("ident", "xi", pos))
            i += 1
            pos += width
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("ident", text[i:j], pos))
            pos += j - i
            i = j
            continue
        if ch in "+-*^()":
            tokens.append(_Token(ch, ch, pos))
            i += 1
            pos += width
            continue
        raise ExpressionSyntaxError(
            f"unexpected character {ch!r} at byte {pos}", pos, _ATOM_EXPECTED
        )
    tokens.append(_Token("end", "", len(data)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: tuple[str, ...]) -> ExpressionSyntaxError:
        tok = self.peek()
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        return ExpressionSyntaxError(
            f"unexpected {what} at byte {tok.offset}; expected {', '.join(expected)}",
            tok.offset,
            expected,
        )

    def parse_expr(self) -> Expression:
        node = self.parse_term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            node = BinOp(op, node, self.parse_term())
        return node

    def parse_term(self) -> Expression:
        node = self.parse_factor()
        while self.peek().kind == "*":
            self.advance()
            node = BinOp("*", node, self.parse_factor())
        return node

    def parse_factor(self) -> Expression:
        negate = False
        if self.peek().kind == "-":
            self.advance()
            negate = True
        node = self.parse_atom()
        if self.peek().kind == "^":
            self.advance()
            tok = self.peek()
            if tok.kind == "-":
                raise NegativeExponentError(
                    f"negative exponent at byte {tok.offset}", tok.offset
                )
            if tok.kind != "nat":
                raise self.fail(("integer",))
            self.advance()
            node = Pow(node, int(tok.text))
        return Neg(node) if negate else node

    def parse_atom(self) -> Expression:
        tok = self.peek()
        if tok.kind == "nat":
            self.advance()
            return Lit(int(tok.text))
        if tok.kind == "ident":
            self.advance()
            if tok.text not in VARIABLES:
                raise UnknownIdentifierError(tok.text, tok.offset)
            return Var(tok.text)
        if tok.kind == "(":
            self.advance()
            node = self.parse_expr()
            if self.peek().kind != ")":
                raise self.fail(("')'", "'+'", "'-'", "'*'"))
            self.advance()
            return node
        raise self.fail(_ATOM_EXPECTED)


def parse_expression(text: str) -> Expression:
    parser = _Parser(_tokenize(text))
    node = parser.parse_expr()
    if parser.peek().kind != "end":
        raise parser.fail(("'+'", "'-'", "'*'", "end of input"))
    return node


def to_polynomial(node: Expression) -> Polynomial:
    """Evaluate the syntax tree by structural recursion."""
    if isinstance(node, Lit):
        return Polynomial.constant(node.value)
    if isinstance(node, Var):
        return Polynomial.variable(node.name)
    if isinstance(node, Neg):
        return -to_polynomial(node.operand)
    if isinstance(node, Pow):
        return to_polynomial(node.base) ** node.exponent
    if isinstance(node, BinOp):
        left = to_polynomial(node.left)
        right = to_polynomial(node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        return left * right
    raise TypeError(f"not an expression node: {node!r}")


def parse_polynomial(text: str) -> Polynomial:
    return to_polynomial(parse_expression(text))
