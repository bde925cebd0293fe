"""Text <-> BiPoly.

Grammar (whitespace ignored)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/' number | juxtaposition) factor)*
    factor := base ('^' integer)?
    base   := number | variable | '(' expr ')'

Numbers are integers, finite decimals (exact: ``0.5`` is ``1/2``) or
fractions written ``a/b``.  Division is only by numeric literals.  The
evaluator is an explicit-stack operator-precedence parser, so nesting depth
is bounded by memory rather than by the interpreter's recursion limit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bipoly import BiPoly

__all__ = [
    "ParseError",
    "ExprSource",
    "DEFAULT_VARIABLES",
    "MAX_EXPONENT",
    "detect_variables",
    "parse_polynomial",
    "format_polynomial",
]

DEFAULT_VARIABLES = ("x", "y")
INDEXED_VARIABLES = ("x1", "x2")
MAX_EXPONENT = 10**6

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))"
)
_TRAILING_WS = re.compile(r"\s*\Z")


class ParseError(ValueError):
    """Malformed polynomial text.  ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int | None = None):
        self.message = message
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


@dataclass(frozen=True)
class ExprSource:
    text: str
    variables: tuple[str, str] = DEFAULT_VARIABLES

    def __post_init__(self):
        if not self.text or not self.text.strip():
            raise ParseError("empty expression", 0)
        if len(self.variables) != 2 or self.variables[0] == self.variables[1]:
            raise ValueError("exactly two distinct variable names are required")


def detect_variables(text: str) -> tuple[str, str]:
    """``("x1", "x2")`` if the text uses indexed names, else ``("x", "y")``."""
    if re.search(r"[A-Za-z_][A-Za-z_]*\d", text):
        return INDEXED_VARIABLES
    return DEFAULT_VARIABLES


@dataclass(frozen=True)
class _Tok:
    kind: str  # num, var, op, end
    value: object
    pos: int
    text: str = ""


def _split_identifier(ident: str, pos: int, variables: Sequence[str]) -> list[_Tok]:
    # "xy" means x*y; longest variable name wins at each step
    names = sorted(variables, key=len, reverse=True)
    out = []
    i = 0
    while i < len(ident):
        for k, name in enumerate(names):
            if ident.startswith(name, i):
                out.append(_Tok("var", variables.index(name), pos + i, name))
                i += len(name)
                break
        else:
            raise ParseError(
                f"unknown variable {ident!r} (variables are {variables[0]!r}, {variables[1]!r})", pos
            )
    return out


def _tokenize(text: str, variables: Sequence[str]) -> list[_Tok]:
    toks: list[_Tok] = []
    pos = 0
    n = len(text)
    while True:
        m = _TRAILING_WS.match(text, pos)
        if m:
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        start = m.start(m.lastgroup)
        if m.group("num") is not None:
            raw = m.group("num")
            toks.append(_Tok("num", Fraction(raw), start, raw))
        elif m.group("ident") is not None:
            toks.extend(_split_identifier(m.group("ident"), start, variables))
        else:
            toks.append(_Tok("op", m.group("op"), start, m.group("op")))
        pos = m.end()
    toks.append(_Tok("end", None, n))
    return toks


_PREC = {"+": 1, "-": 1, "neg": 1, "*": 2, "/": 2}


def _apply(op: _Tok, operands: list[BiPoly]) -> None:
    if op.value == "neg":
        operands.append(-operands.pop())
        return
    rhs = operands.pop()
    lhs = operands.pop()
    if op.value == "+":
        operands.append(lhs + rhs)
    elif op.value == "-":
        operands.append(lhs - rhs)
    elif op.value == "*":
        operands.append(lhs * rhs)
    else:
        c = rhs.constant_term()
        if len(rhs) != 1 or not c:
            raise ParseError("division is only allowed by a nonzero numeric literal", op.pos)
        operands.append(lhs.scale(1 / c))


def parse_polynomial(src: ExprSource | str, variables: Sequence[str] | None = None) -> BiPoly:
    """Parse and fully expand a polynomial in two variables."""
    if isinstance(src, str):
        src = ExprSource(src, tuple(variables) if variables else detect_variables(src))
    names = src.variables
    toks = _tokenize(src.text, names)

    operands: list[BiPoly] = []
    ops: list[_Tok] = []
    expect_operand = True
    prev: _Tok | None = None
    i = 0

    def push_binary(tok: _Tok) -> None:
        p = _PREC[tok.value]
        while ops and ops[-1].value != "(" and _PREC[ops[-1].value] >= p:
            _apply(ops.pop(), operands)
        ops.append(tok)

    while True:
        tok = toks[i]
        if expect_operand:
            if tok.kind == "num":
                operands.append(BiPoly.constant(tok.value))
                expect_operand = False
            elif tok.kind == "var":
                operands.append(BiPoly.var(tok.value + 1))
                expect_operand = False
            elif tok.value == "(":
                ops.append(tok)
            elif tok.value == "-" and (prev is None or prev.value == "("):
                ops.append(_Tok("op", "neg", tok.pos, "-"))
            elif tok.kind == "end":
                raise ParseError("unexpected end of expression", tok.pos)
            else:
                raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        else:
            if tok.kind in ("num", "var") or tok.value == "(":
                # juxtaposition is multiplication
                push_binary(_Tok("op", "*", tok.pos, ""))
                expect_operand = True
                continue
            if tok.kind == "end":
                break
            if tok.value in ("+", "-", "*"):
                push_binary(tok)
                expect_operand = True
            elif tok.value == "/":
                nxt = toks[i + 1]
                if nxt.kind != "num":
                    raise ParseError("division is only allowed by a numeric literal", tok.pos)
                if nxt.value == 0:
                    raise ParseError("division by zero", nxt.pos)
                push_binary(tok)
                expect_operand = True
            elif tok.value == "^":
                i = _read_exponent(toks, i, operands)
                tok = toks[i]
                if toks[i + 1].value == "^":
                    raise ParseError("chained '^' needs parentheses", toks[i + 1].pos)
            elif tok.value == ")":
                while ops and ops[-1].value != "(":
                    _apply(ops.pop(), operands)
                if not ops:
                    raise ParseError("unbalanced ')'", tok.pos)
                ops.pop()
            else:
                raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        prev = tok
        i += 1

    while ops:
        op = ops.pop()
        if op.value == "(":
            raise ParseError("unbalanced '('", op.pos)
        _apply(op, operands)
    assert len(operands) == 1
    return operands[0]


def _read_exponent(toks: list[_Tok], i: int, operands: list[BiPoly]) -> int:
    caret = toks[i]
    nxt = toks[i + 1]
    if nxt.value == "-":
        raise ParseError("negative exponents are not allowed", nxt.pos)
    if nxt.kind != "num":
        raise ParseError("'^' must be followed by a nonnegative integer literal", caret.pos)
    if "." in nxt.text:
        raise ParseError("fractional exponents are not allowed", nxt.pos)
    n = int(nxt.value)
    if n > MAX_EXPONENT:
        raise ParseError(f"exponent {n} exceeds the cap {MAX_EXPONENT}", nxt.pos)
    operands.append(operands.pop() ** n)
    return i + 1


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: BiPoly, variables: Sequence[str] = DEFAULT_VARIABLES) -> str:
    """Canonical text, terms in descending lexicographic exponent order."""
    if p.is_zero():
        return "0"
    x, y = variables
    out = []
    for (a, b), c in p.canonical_items():
        factors = []
        if a:
            factors.append(x if a == 1 else f"{x}^{a}")
        if b:
            factors.append(y if b == 1 else f"{y}^{b}")
        mag = abs(c)
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coeff(mag)] + factors)
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)
