"""Expression parser for polynomials over K = k(x).

Grammar: + - * ^ with parentheses; variables "x" and "T"; "z" denotes the
generator of the coefficient field when it is a proper extension.  Implicit
multiplication is not supported; powers take nonnegative integer exponents.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .poly import RatFunc, TPoly

_TOKEN_RE = re.compile(r"\s*(\d+|[xTz()+\-*^])")


def _tokenize(src):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if not m:
            rest = src[pos:].strip()
            if not rest:
                break
            raise ParseError(f"unexpected character {rest[0]!r} in {src!r}")
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, ctx):
        self.tokens = tokens
        self.pos = 0
        self.ctx = ctx

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        t = self.peek()
        self.pos += 1
        return t

    def expect(self, what):
        t = self.take()
        if t != what:
            raise ParseError(f"expected {what!r}, got {t!r}")

    def parse_expr(self):
        node = self.parse_term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.parse_term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def parse_term(self):
        node = self.parse_power()
        while self.peek() == "*":
            self.take()
            node = node * self.parse_power()
        return node

    def parse_power(self):
        base = self.parse_atom()
        if self.peek() == "^":
            self.take()
            t = self.take()
            if t is None or not t.isdigit():
                raise ParseError("exponent must be a nonnegative integer")
            e = int(t)
            out = TPoly.const(RatFunc.from_int(self.ctx, 1))
            for _ in range(e):
                out = out * base
            return out
        return base

    def parse_atom(self):
        t = self.take()
        if t is None:
            raise ParseError("unexpected end of expression")
        if t == "(":
            node = self.parse_expr()
            self.expect(")")
            return node
        if t == "-":
            return -self.parse_power()
        if t == "x":
            return TPoly.const(RatFunc.x(self.ctx))
        if t == "T":
            return TPoly.t(self.ctx)
        if t == "z":
            if self.ctx.d == 1:
                raise ParseError("generator z used over a prime field")
            return TPoly.const(RatFunc.const(self.ctx.gen()))
        if t.isdigit():
            return TPoly.const(RatFunc.from_int(self.ctx, int(t)))
        raise ParseError(f"unexpected token {t!r}")


def parse_tpoly(src, ctx):
    tokens = _tokenize(src)
    if not tokens:
        raise ParseError("empty expression")
    parser = _Parser(tokens, ctx)
    node = parser.parse_expr()
    if parser.peek() is not None:
        raise ParseError(f"trailing input at token {parser.peek()!r}")
    return node


def parse_ratfunc(src, ctx):
    g = parse_tpoly(src, ctx)
    if g.degree > 0:
        raise ParseError(f"{src!r} must not involve T")
    if g.is_zero():
        return RatFunc.from_int(ctx, 0)
    return g.coeff(0)


def parse_elem(src, ctx):
    r = parse_ratfunc(src, ctx)
    if not r.is_const():
        raise ParseError(f"{src!r} must be a constant field element")
    return r.const_value()


def parse_basis(src, ctx):
    """Comma-separated list of rational functions."""
    items = [s for s in src.split(",") if s.strip()]
    if not items:
        raise ParseError("empty basis")
    return [parse_ratfunc(s, ctx) for s in items]
