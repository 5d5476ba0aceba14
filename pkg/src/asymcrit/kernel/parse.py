"""Recursive-descent parser for polynomial expressions.

Grammar::

    poly     := term (('+' | '-') term)*
    term     := ['-'] factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := rational | ident | '(' poly ')'
    rational := int ('/' uint)?

Whitespace is insignificant.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Sequence, Tuple

from .domains import QQ, Domain
from .poly import Poly, PolyRing

_TOKEN = re.compile(r"(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()])")


class ParseError(ValueError):
    """Syntax error; ``offset`` is the byte offset into the UTF-8 input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UnknownVariableError(ValueError):
    def __init__(self, name: str, offset: int):
        super().__init__(f"unknown variable {name!r} at offset {offset}")
        self.name = name
        self.offset = offset


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        offset = len(text[:pos].encode("utf-8"))
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", offset)
        tokens.append((m.lastgroup, m.group(), offset))
        pos = m.end()
    tokens.append(("end", "", len(text.encode("utf-8"))))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.tokens = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, off = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, found {val or 'end of input'!r}", off)

    def parse(self) -> Poly:
        result = self.poly()
        kind, val, off = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {val!r}", off)
        return result

    def poly(self) -> Poly:
        result = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term(allow_sign=False)
                result = result + t if val == "+" else result - t
            else:
                return result

    def term(self, allow_sign=True) -> Poly:
        neg = False
        kind, val, _ = self.peek()
        if allow_sign and kind == "op" and val == "-":
            self.take()
            neg = True
        result = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                result = result * self.factor()
            else:
                break
        return -result if neg else result

    def factor(self) -> Poly:
        base = self.base()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, off = self.take()
            if kind != "num":
                raise ParseError("expected unsigned integer exponent", off)
            return base ** int(val)
        return base

    def base(self) -> Poly:
        kind, val, off = self.take()
        if kind == "num":
            value = Fraction(int(val))
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.take()
                k3, v3, off3 = self.take()
                if k3 != "num":
                    raise ParseError("expected unsigned integer denominator", off3)
                if int(v3) == 0:
                    raise ParseError("zero denominator", off3)
                value = value / int(v3)
            return self.ring.const(value)
        if kind == "ident":
            if val not in self.ring:
                raise UnknownVariableError(val, off)
            return self.ring.gen(val)
        if kind == "op" and val == "(":
            inner = self.poly()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected {val or 'end of input'!r}", off)


def parse_polynomial(text: str, ambient, domain: Domain = QQ) -> Poly:
    """Parse ``text`` into a polynomial of ``ambient`` (a ring or variable list)."""
    ring = ambient if isinstance(ambient, PolyRing) else PolyRing(list(ambient), domain)
    return _Parser(text, ring).parse()


def parse_many(texts: Sequence[str], ambient) -> List[Poly]:
    ring = ambient if isinstance(ambient, PolyRing) else PolyRing(list(ambient))
    return [parse_polynomial(t, ring) for t in texts]
