"""
Parser for the textual field-element syntax, e.g. ``(1+2*w)/(w^2)``.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := "-" factor | atom ("^" ["-"] int)?
    atom   := int | "w" | "(" expr ")"
"""

from __future__ import annotations

import re
from typing import List

from utils import DomainError

from .field import FieldElem
from .residue import check_prime

_TOKEN = re.compile(r"\s*(\d+|w|ϖ|[()+\-*/^])")


def _tokenize(text: str) -> List[str]:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            raise DomainError(f"unexpected character {text[pos]!r} in field element {text!r}")
        tokens.append("w" if match.group(1) == "ϖ" else match.group(1))
        pos = match.end()
    if not tokens:
        raise DomainError("empty field element")
    return tokens


class _Parser:
    def __init__(self, text: str, q: int):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.q = q

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None) -> str:
        token = self.peek()
        if token is None or (expected is not None and token != expected):
            raise DomainError(f"malformed field element {self.text!r}: expected {expected or 'a token'}")
        self.pos += 1
        return token

    def expr(self) -> FieldElem:
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> FieldElem:
        value = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.factor()
            value = value * rhs if op == "*" else value / rhs
        return value

    def factor(self) -> FieldElem:
        if self.peek() == "-":
            self.take()
            return -self.factor()
        base = self.atom()
        if self.peek() == "^":
            self.take()
            sign = -1 if self.peek() == "-" else 1
            if sign < 0:
                self.take()
            exponent = self.take()
            if not exponent.isdigit():
                raise DomainError(f"malformed exponent in {self.text!r}")
            return base ** (sign * int(exponent))
        return base

    def atom(self) -> FieldElem:
        token = self.take()
        if token == "(":
            value = self.expr()
            self.take(")")
            return value
        if token == "w":
            return FieldElem.w_power(1, self.q)
        if token.isdigit():
            return FieldElem.from_int(int(token), self.q)
        raise DomainError(f"malformed field element {self.text!r} near {token!r}")


def parse_field_elem(text: str, q: int) -> FieldElem:
    """Parse the reduced-fraction syntax used in reports and matrix files."""
    check_prime(q)
    parser = _Parser(text, q)
    value = parser.expr()
    if parser.peek() is not None:
        raise DomainError(f"trailing input in field element {text!r}")
    return value
