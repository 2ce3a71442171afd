"""Recursive-descent parser for polynomial generator text.

Grammar::

    expr   := [sign] term (('+' | '-') term)*
    term   := power (('*' | '/') power)*
    power  := atom (('^' | '**') INT)?
    atom   := INT | NAME | '(' expr ')'

A sign is only accepted at the start of an expression, so ``x0 + + x1`` is
rejected.  Division is allowed only by nonzero constants, which makes the
canonical rendering of rational coefficients (``3/4*x``) round-trip.
"""

from __future__ import annotations

import re
from typing import Sequence

from .field import Field
from .polynomial import Polynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


class PolynomialSyntaxError(ValueError):
    """Malformed polynomial text; ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, text: str, pos: int):
        self.offset = len(text[:pos].encode())
        self.text = text
        super().__init__(f"{message} at byte {self.offset}")


class UnknownVariable(PolynomialSyntaxError):
    """A name that is not among the declared variables."""


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolynomialSyntaxError(f"unexpected character {text[start]!r}", text, start)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, names: Sequence[str], field: Field):
        self.text = text
        self.field = field
        self.nvars = len(names)
        self.index = {name: i for i, name in enumerate(names)}
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return PolynomialSyntaxError(message, self.text, tok[2])

    def at_op(self, *ops):
        kind, value, _ = self.peek()
        return kind == "op" and value in ops

    def parse(self) -> Polynomial:
        result = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return result

    def expr(self) -> Polynomial:
        negate = False
        if self.at_op("+", "-"):
            negate = self.take()[1] == "-"
        result = self.term()
        if negate:
            result = -result
        while self.at_op("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.power()
        while self.at_op("*", "/"):
            op_tok = self.take()
            rhs = self.power()
            if op_tok[1] == "*":
                result = result * rhs
                continue
            if rhs.degree > 0:
                raise self.error("division by a non-constant", op_tok)
            c = rhs.coefficient((0,) * self.nvars)
            if not c:
                raise self.error("division by zero", op_tok)
            result = result.scale(self.field.inv(c))
        return result

    def power(self) -> Polynomial:
        base = self.atom()
        if self.at_op("^", "**"):
            self.take()
            kind, value, _ = self.peek()
            if kind != "int":
                raise self.error("exponent must be a nonnegative integer literal")
            self.take()
            base = base ** int(value)
        return base

    def atom(self) -> Polynomial:
        kind, value, pos = self.peek()
        if kind == "int":
            self.take()
            return Polynomial.constant(self.field, self.nvars, int(value))
        if kind == "name":
            self.take()
            if value not in self.index:
                raise UnknownVariable(f"unknown variable {value!r}", self.text, pos)
            return Polynomial.variable(self.field, self.nvars, self.index[value])
        if self.at_op("("):
            self.take()
            inner = self.expr()
            if not self.at_op(")"):
                raise self.error("expected ')'")
            self.take()
            return inner
        if kind == "end":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {value!r}")


def parse_polynomial(text: str, variables: Sequence[str], field: Field | None = None) -> Polynomial:
    """Parse ``text`` into a polynomial over ``field`` in the declared variables.

    Coefficients are reduced into the field, so ``"7*x0^2"`` over GF(7) is
    the zero polynomial.  Homogeneity is not checked here; callers that
    need it raise :class:`~singcurve.polynomial.NonHomogeneousGenerator`.
    """
    if len(set(variables)) != len(variables):
        raise ValueError("variable names must be distinct")
    return _Parser(text, list(variables), field or Field.prime()).parse()
