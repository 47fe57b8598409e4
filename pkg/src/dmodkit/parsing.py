"""Polynomial parsing and ring-name validation for the command line.

Grammar (explicit '*' required, no implicit multiplication):

    expr   := '-'? term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := coeff | var ('^' nat)? | '(' expr ')'
    coeff  := nat ('/' nat)?

Coefficients are exact rationals; factor order is preserved, so the same
grammar parses operator polynomials in noncommutative algebras.
"""

from __future__ import annotations

import re

from gmpy2 import mpq

from .galgebra import GAlgebra, OpPoly, star_mul

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|([-+*^/()]))")

RESERVED = re.compile(r"^(s|t|Dt|h)\d*$")


class ParseError(ValueError):
    """Syntax error with position and expected-token information."""

    def __init__(self, message, pos, expected=None):
        self.pos = pos
        self.expected = expected
        suffix = f" (expected {expected})" if expected else ""
        super().__init__(f"{message} at position {pos}{suffix}")


def validate_ring_names(names):
    """Reject duplicate or reserved input-ring variable names."""
    names = list(names)
    if len(set(names)) != len(names):
        raise ValueError("duplicate ring variable names")
    for nm in names:
        if not re.match(r"^[A-Za-z][A-Za-z0-9]*$", nm):
            raise ValueError(f"invalid variable name {nm!r}")
        if RESERVED.match(nm):
            raise ValueError(f"variable name {nm!r} is reserved for operators")
    for nm in names:
        for other in names:
            if nm == "D" + other:
                raise ValueError(
                    f"variable name {nm!r} collides with the partial of {other!r}")
    return names


class _Tokens:
    def __init__(self, text):
        self.text = text
        self.toks = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == m.start():
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            if m.group(1):
                self.toks.append(("num", m.group(1), m.start(1)))
            elif m.group(2):
                self.toks.append(("ident", m.group(2), m.start(2)))
            elif m.group(3):
                self.toks.append(("op", m.group(3), m.start(3)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("eof", "", len(self.text))

    def next(self):
        t = self.peek()
        self.i += 1
        return t


class _Parser:
    def __init__(self, text, alg: GAlgebra):
        self.toks = _Tokens(text)
        self.alg = alg

    def parse(self) -> OpPoly:
        p = self.expr()
        kind, val, pos = self.toks.peek()
        if kind != "eof":
            raise ParseError(f"trailing input {val!r}", pos, "+, -, * or end of input")
        return p

    def expr(self) -> OpPoly:
        kind, val, pos = self.toks.peek()
        negate = False
        if kind == "op" and val == "-":
            self.toks.next()
            negate = True
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            kind, val, pos = self.toks.peek()
            if kind == "op" and val in "+-":
                self.toks.next()
                rhs = self.term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def term(self) -> OpPoly:
        acc = self.factor()
        while True:
            kind, val, pos = self.toks.peek()
            if kind == "op" and val == "*":
                self.toks.next()
                acc = star_mul(acc, self.factor())
            else:
                return acc

    def factor(self) -> OpPoly:
        kind, val, pos = self.toks.next()
        if kind == "num":
            num = int(val)
            k2, v2, _ = self.toks.peek()
            if k2 == "op" and v2 == "/":
                self.toks.next()
                k3, v3, p3 = self.toks.next()
                if k3 != "num":
                    raise ParseError("malformed rational", p3, "a positive integer")
                den = int(v3)
                if den == 0:
                    raise ParseError("zero denominator", p3)
                return self.alg.scalar(mpq(num, den))
            return self.alg.scalar(num)
        if kind == "ident":
            if val not in self.alg._index:
                raise ParseError(f"unknown variable {val!r}", pos,
                                 f"one of {', '.join(self.alg.names)}")
            base = self.alg.gen(val)
            k2, v2, _ = self.toks.peek()
            if k2 == "op" and v2 == "^":
                self.toks.next()
                k3, v3, p3 = self.toks.next()
                if k3 != "num":
                    raise ParseError("malformed exponent", p3,
                                     "a non-negative integer (parentheses not allowed)")
                return self.alg.poly({self.alg.unit_exp(self.alg.index(val), int(v3)): 1})
            return base
        if kind == "op" and val == "(":
            inner = self.expr()
            k2, v2, p2 = self.toks.next()
            if not (k2 == "op" and v2 == ")"):
                raise ParseError("unbalanced parenthesis", p2, "')'")
            return inner
        raise ParseError(f"unexpected token {val!r}", pos,
                         "a coefficient, variable or '('")


def parse_poly(text: str, ring: GAlgebra) -> OpPoly:
    """Parse a commutative polynomial over the input ring."""
    if ring.core.rel:
        raise ValueError("parse_poly expects a commutative input ring")
    return _Parser(text, ring).parse()


def parse_op(text: str, alg: GAlgebra) -> OpPoly:
    """Parse an operator polynomial; factor order feeds the star product."""
    return _Parser(text, alg).parse()


def render_poly(p: OpPoly) -> str:
    """Canonical string form; reparses to an equal element."""
    return p.render()
