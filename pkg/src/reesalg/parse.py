"""Recursive-descent parser for polynomial expressions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('+' | '-') factor | atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')'

Juxtaposition (``2x``) is rejected.  ``/`` is only accepted when the divisor
evaluates to a nonzero constant, so rendered rational coefficients such as
``1/2*x`` parse back.
"""

from __future__ import annotations

import re

from reesalg.poly import Poly, PolyRing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.message = message
        self.offset = offset


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastindex)
        offset = len(text[:start].encode("utf-8"))
        if m.group(1) is not None:
            tokens.append(("INT", m.group(1), offset))
        elif m.group(2) is not None:
            tokens.append(("NAME", m.group(2), offset))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", offset)
            tokens.append((ch, ch, offset))
        pos = m.end()
    tokens.append(("EOF", "", len(text.encode("utf-8"))))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def _juxtaposition(self, tok):
        if tok[0] in ("INT", "NAME", "("):
            raise ParseError("implicit multiplication is not allowed; use '*'", tok[2])

    def parse(self) -> Poly:
        if self.peek()[0] == "EOF":
            raise ParseError("empty expression", self.peek()[2])
        result = self.expr()
        tok = self.peek()
        if tok[0] != "EOF":
            self._juxtaposition(tok)
            if tok[0] == ")":
                raise ParseError("unbalanced ')'", tok[2])
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
        return result

    def expr(self) -> Poly:
        result = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Poly:
        result = self.factor()
        while self.peek()[0] in ("*", "/"):
            op, _, offset = self.take()
            rhs = self.factor()
            if op == "*":
                result = result * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise ParseError("division only by a nonzero constant", offset)
                c = rhs.constant_term()
                result = result.scale(self.ring.field.inv(c))
        return result

    def factor(self) -> Poly:
        kind = self.peek()[0]
        if kind in ("+", "-"):
            self.take()
            inner = self.factor()
            return -inner if kind == "-" else inner
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "INT":
                raise ParseError("malformed exponent: expected a nonnegative integer", tok[2])
            self.take()
            base = base ** int(tok[1])
        return base

    def atom(self) -> Poly:
        kind, value, offset = self.take()
        if kind == "INT":
            return self.ring.const(int(value))
        if kind == "NAME":
            if value not in self.ring.variables:
                raise ParseError(f"unknown variable {value!r}", offset)
            return self.ring.var(value)
        if kind == "(":
            inner = self.expr()
            tok = self.peek()
            if tok[0] != ")":
                self._juxtaposition(tok)
                raise ParseError("unbalanced '(': missing ')'", tok[2])
            self.take()
            return inner
        if kind == "EOF":
            raise ParseError("unexpected end of input", offset)
        if kind == ")":
            raise ParseError("unbalanced ')'", offset)
        raise ParseError(f"unexpected token {value!r}", offset)


def parse_poly(text: str, ring: PolyRing) -> Poly:
    """Parse ``text`` into a polynomial of ``ring``.

    Raises :class:`ParseError` carrying the byte offset of the problem.
    """
    return _Parser(text, ring).parse()
