"""
Polynomial entries in JSON documents are strings such as "x_0^2*x_1 - 3/4*x_2".

    expr   := ['+' | '-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' INT]
    atom   := INT ['/' INT] | NAME | '(' expr ')'

The grammar only uses ring.variable, ring.scalar and the ring operations, so
the same parser reads exterior algebra elements ("e_0*e_2").
"""
import re
from fractions import Fraction
from typing import List, Optional, Tuple

from multibgg.errors import SchemaError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")

Token = Tuple[str, str]


def tokenize(text: str, pointer: Optional[str] = None) -> List[Token]:
    tokens = []
    for number, name, op in _TOKEN.findall(text):
        if number:
            tokens.append(("int", number))
        elif name:
            tokens.append(("name", name))
        elif op.strip():
            if op not in "+-*^/()":
                raise SchemaError(f"unexpected character {op!r} in {text!r}", pointer)
            tokens.append(("op", op))
    return tokens


class _Parser:
    def __init__(self, ring, text: str, pointer: Optional[str]):
        self.ring = ring
        self.text = text
        self.pointer = pointer
        self.tokens = tokenize(text, pointer)
        self.pos = 0

    def fail(self, message: str):
        raise SchemaError(f"{message} in {self.text!r}", self.pointer)

    def peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> Token:
        tok = self.peek()
        if tok is None:
            self.fail("unexpected end of input")
        self.pos += 1
        return tok

    def accept(self, op: str) -> bool:
        if self.peek() == ("op", op):
            self.pos += 1
            return True
        return False

    def parse(self):
        if not self.tokens:
            self.fail("empty polynomial")
        value = self.expr()
        if self.peek() is not None:
            self.fail(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self):
        negate = False
        if self.accept("-"):
            negate = True
        else:
            self.accept("+")
        value = self.term()
        if negate:
            value = -value
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.factor()
        while self.accept("*"):
            value = value * self.factor()
        return value

    def factor(self):
        base = self.atom()
        if self.accept("^"):
            kind, text = self.take()
            if kind != "int":
                self.fail("exponent must be a nonnegative integer")
            base = base ** int(text)
        return base

    def atom(self):
        kind, text = self.take()
        if kind == "int":
            c = Fraction(int(text))
            if self.accept("/"):
                kind, den = self.take()
                if kind != "int" or int(den) == 0:
                    self.fail("bad denominator")
                c = Fraction(int(text), int(den))
            return self.ring.scalar(c)
        if kind == "name":
            try:
                return self.ring.variable(text)
            except KeyError:
                self.fail(f"unknown variable {text!r}")
        if text == "(":
            value = self.expr()
            if not self.accept(")"):
                self.fail("missing ')'")
            return value
        self.fail(f"unexpected {text!r}")


def parse_polynomial(ring, text, pointer: Optional[str] = None):
    """Parse `text` into an element of `ring`. Integers are accepted as constants."""
    if isinstance(text, int) and not isinstance(text, bool):
        return ring.scalar(text)
    if not isinstance(text, str):
        raise SchemaError(f"expected a polynomial string, got {type(text).__name__}", pointer)
    return _Parser(ring, text, pointer).parse()


def parse_rows(ring, rows, pointer: str = ""):
    """A matrix given as a list of rows of polynomial strings."""
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise SchemaError("a matrix is a list of rows", pointer)
    if rows and len({len(r) for r in rows}) != 1:
        raise SchemaError("rows have different lengths", pointer)
    return [[parse_polynomial(ring, f, f"{pointer}/{i}/{j}") for j, f in enumerate(row)]
            for i, row in enumerate(rows)]
