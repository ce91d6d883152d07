"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace-insensitive)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom (('^'|'**') INT)?
    atom   := INT | NAME | '(' expr ')' | '-' factor

Names of the form ``z<m>`` that are not declared variables denote the
primitive root of unity exp(2*pi*i/m).  Division is only allowed by a
nonzero constant.
"""

from __future__ import annotations

import re
from typing import Sequence

from .cyclotomic import CyclotomicNumber
from .errors import ParseError
from .polynomial import Polynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")
_ZETA = re.compile(r"z(\d+)$")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: tuple[str, ...]):
        self.text = text
        self.variables = variables
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.text, tok[2])

    def accept(self, *ops: str):
        kind, val, _ = self.peek()
        if kind == "op" and val in ops:
            self.i += 1
            return val
        return None

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        result = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return result

    def expr(self) -> Polynomial:
        sign = self.accept("+", "-")
        acc = self.term()
        if sign == "-":
            acc = -acc
        while True:
            op = self.accept("+", "-")
            if op is None:
                return acc
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs

    def term(self) -> Polynomial:
        acc = self.factor()
        while True:
            tok = self.peek()
            op = self.accept("*", "/")
            if op is None:
                return acc
            rhs = self.factor()
            if op == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant():
                    self.fail("division by a non-constant expression", tok)
                c = rhs.constant_term()
                if not c:
                    self.fail("division by zero", tok)
                acc = acc.scale(c.inverse())

    def factor(self) -> Polynomial:
        if self.accept("-"):
            return -self.factor()
        base = self.atom()
        tok = self.peek()
        if self.accept("^", "**"):
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "-":
                self.fail("negative exponent", nxt)
            if nxt[0] != "int":
                self.fail("exponent must be a non-negative integer literal", nxt)
            self.take()
            if self.peek()[0] == "op" and self.peek()[1] in ("^", "**"):
                self.fail("chained exponents are ambiguous; use parentheses", tok)
            return base ** int(nxt[1])
        return base

    def atom(self) -> Polynomial:
        kind, val, pos = tok = self.take()
        if kind == "int":
            return Polynomial.constant(int(val), self.variables)
        if kind == "name":
            if val in self.variables:
                return Polynomial.var(val, self.variables)
            m = _ZETA.match(val)
            if m:
                order = int(m.group(1))
                if order < 1:
                    self.fail("root-of-unity order must be positive", tok)
                return Polynomial.constant(CyclotomicNumber.root_of_unity(order, 1), self.variables)
            self.fail(f"unknown variable {val!r}", tok)
        if kind == "op" and val == "(":
            inner = self.expr()
            if not self.accept(")"):
                self.fail("expected ')'")
            return inner
        if kind == "end":
            self.fail("unexpected end of input", tok)
        self.fail(f"unexpected {val!r}", tok)


def parse_polynomial(text: str, variables: Sequence[str] | None = None) -> Polynomial:
    """Parse ``text`` over ``variables``.

    With ``variables=None`` every identifier other than a ``z<m>`` literal is
    declared in order of first appearance.
    """
    if variables is None:
        seen: list[str] = []
        for kind, val, _ in _tokenize(text):
            if kind == "name" and not _ZETA.match(val) and val not in seen:
                seen.append(val)
        variables = seen
    return _Parser(text, tuple(variables)).parse()
