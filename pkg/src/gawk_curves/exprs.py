"""Curve-definition expression language.

A curve is written as semicolon-separated coordinate expressions in one free
variable plus a mandatory domain clause::

    x1 = cos(t); x2 = sin(t); x3 = t; t in [0, 10]

Supported functions: sin, cos, exp, sqrt, pow (constant exponent).
Operators: + - * / and unary minus.  Constants pi and e are predefined.
Whitespace is insignificant.  The same expression grammar (with free
variable ``s``) defines closed-form curvature functions for profiles.

The parser is a plain recursive-descent over a regex tokenizer; it reports
1-based line/column positions and never raises anything but ParseError on
arbitrary text.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

import numpy as np

from . import jets
from .errors import GawkCurvesError, ParseError, SingularityError
from .jets import Jet5, JetPoint

MAX_DIM = 8

FUNCTIONS = {"sin": 1, "cos": 1, "exp": 1, "sqrt": 1, "pow": 2}
CONSTANTS = {"pi": math.pi, "e": math.e}


# AST ------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    child: object


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: object
    right: object


@dataclass(frozen=True)
class Call:
    fn: str
    args: tuple


@dataclass(frozen=True)
class CurveDef:
    """Parsed curve: n coordinate expressions of one variable on [t_lo, t_hi]."""

    dim: int
    components: tuple
    t_lo: float
    t_hi: float
    var: str = "t"
    label: str | None = None


# Tokenizer ------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[+\-*/=;,()\[\]])
  | (?P<ws>\s+)
  | (?P<bad>.)
    """,
    re.VERBOSE,
)


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    line, col = 1, 1
    for m in _TOKEN_RE.finditer(text):
        kind = m.lastgroup
        chunk = m.group()
        if kind == "ws":
            nl = chunk.count("\n")
            if nl:
                line += nl
                col = len(chunk) - chunk.rfind("\n")
            else:
                col += len(chunk)
            continue
        if kind == "bad":
            raise ParseError(f"unexpected character {chunk!r}", line, col)
        toks.append(_Tok(kind, chunk, line, col))
        col += len(chunk)
    toks.append(_Tok("eof", "", line, col))
    return toks


class _Parser:
    def __init__(self, toks: list[_Tok], var: str):
        self.toks = toks
        self.pos = 0
        self.var = var

    def peek(self) -> _Tok:
        return self.toks[self.pos]

    def next(self) -> _Tok:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, text: str) -> _Tok:
        tok = self.peek()
        if tok.text != text:
            shown = tok.text or "end of input"
            raise ParseError(f"expected {text!r}, found {shown!r}", tok.line, tok.col)
        return self.next()

    def fail(self, message: str):
        tok = self.peek()
        raise ParseError(message, tok.line, tok.col)

    # expr := term (('+'|'-') term)*
    def expr(self):
        node = self.term()
        while self.peek().text in ("+", "-"):
            op = self.next().text
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek().text in ("*", "/"):
            op = self.next().text
            node = BinOp(op, node, self.factor())
        return node

    def factor(self):
        if self.peek().text == "-":
            self.next()
            return Neg(self.factor())
        return self.atom()

    def atom(self):
        tok = self.peek()
        if tok.kind == "num":
            self.next()
            return Num(float(tok.text))
        if tok.kind == "ident":
            self.next()
            name = tok.text
            if self.peek().text == "(":
                if name not in FUNCTIONS:
                    raise ParseError(f"unknown function {name!r}", tok.line, tok.col)
                self.next()
                args = [self.expr()]
                while self.peek().text == ",":
                    self.next()
                    args.append(self.expr())
                self.expect(")")
                if len(args) != FUNCTIONS[name]:
                    raise ParseError(
                        f"{name} takes {FUNCTIONS[name]} argument(s), got {len(args)}",
                        tok.line,
                        tok.col,
                    )
                if name == "pow" and not _is_constant(args[1]):
                    raise ParseError(
                        "pow exponent must be a constant expression",
                        tok.line,
                        tok.col,
                    )
                return Call(name, tuple(args))
            if name == self.var:
                return Var(name)
            if name in CONSTANTS:
                return Num(CONSTANTS[name])
            raise ParseError(f"unknown identifier {name}", tok.line, tok.col)
        if tok.text == "(":
            self.next()
            node = self.expr()
            self.expect(")")
            return node
        shown = tok.text or "end of input"
        raise ParseError(f"expected expression, found {shown!r}", tok.line, tok.col)

    def number_signed(self) -> float:
        sign = 1.0
        while self.peek().text == "-":
            self.next()
            sign = -sign
        tok = self.peek()
        if tok.kind == "num":
            self.next()
            return sign * float(tok.text)
        if tok.kind == "ident" and tok.text in CONSTANTS:
            self.next()
            return sign * CONSTANTS[tok.text]
        self.fail("expected a number")


def _is_constant(node) -> bool:
    if isinstance(node, Num):
        return True
    if isinstance(node, Neg):
        return _is_constant(node.child)
    if isinstance(node, BinOp):
        return _is_constant(node.left) and _is_constant(node.right)
    if isinstance(node, Call):
        return all(_is_constant(a) for a in node.args)
    return False


def parse_expr(text: str, var: str = "t"):
    """Parse a single expression in the given free variable."""
    p = _Parser(_tokenize(text), var)
    node = p.expr()
    if p.peek().kind != "eof":
        p.fail(f"unexpected trailing input {p.peek().text!r}")
    return node


def parse_curve(text: str, label: str | None = None) -> CurveDef:
    """Parse ``x1 = ...; x2 = ...; t in [a, b]`` into a CurveDef."""
    p = _Parser(_tokenize(text), "t")
    components = []
    while True:
        tok = p.peek()
        if tok.kind == "ident" and tok.text == "t" and components:
            break
        if tok.kind != "ident" or not re.fullmatch(r"x\d+", tok.text):
            p.fail("expected a component assignment like 'x1 = ...'")
        idx = int(tok.text[1:])
        if idx != len(components) + 1:
            raise ParseError(
                f"components must be numbered consecutively; expected x{len(components) + 1}, "
                f"found {tok.text}",
                tok.line,
                tok.col,
            )
        p.next()
        p.expect("=")
        components.append(p.expr())
        p.expect(";")
    if not (1 <= len(components) <= MAX_DIM):
        p.fail(f"dimension must be between 1 and {MAX_DIM}")
    tok = p.next()
    if tok.text != "t":
        raise ParseError("expected domain clause 't in [a, b]'", tok.line, tok.col)
    tok = p.next()
    if tok.text != "in":
        raise ParseError("expected 'in' after 't'", tok.line, tok.col)
    p.expect("[")
    t_lo = p.number_signed()
    p.expect(",")
    t_hi = p.number_signed()
    p.expect("]")
    if p.peek().text == ";":
        p.next()
    if p.peek().kind != "eof":
        p.fail(f"unexpected trailing input {p.peek().text!r}")
    if not (t_lo < t_hi):
        raise ParseError(f"empty parameter interval [{t_lo}, {t_hi}]")
    if len(components) < 2:
        raise ParseError("a curve needs at least 2 components")
    return CurveDef(len(components), tuple(components), t_lo, t_hi, "t", label)


# Printing -------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def format_expr(node) -> str:
    return _fmt(node, 0)


def _fmt(node, parent_prec: int) -> str:
    if isinstance(node, Num):
        return repr(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        inner = _fmt(node.child, 3)
        text = f"-{inner}"
        return f"({text})" if parent_prec > 2 else text
    if isinstance(node, Call):
        return f"{node.fn}({', '.join(_fmt(a, 0) for a in node.args)})"
    if isinstance(node, BinOp):
        prec = _PREC[node.op]
        left = _fmt(node.left, prec)
        # - and / are left-associative: right operand binds one level tighter
        right = _fmt(node.right, prec + (1 if node.op in "-/" else 0))
        text = f"{left} {node.op} {right}"
        return f"({text})" if parent_prec > prec else text
    raise TypeError(f"not an AST node: {node!r}")


def format_curve(cdef: CurveDef) -> str:
    parts = [
        f"x{i + 1} = {format_expr(e)}" for i, e in enumerate(cdef.components)
    ]
    parts.append(f"t in [{cdef.t_lo!r}, {cdef.t_hi!r}]")
    return "; ".join(parts)


# Evaluation -----------------------------------------------------------


def eval_expr_jet(node, at: float, var: str = "t") -> Jet5:
    """Evaluate an expression as an order-5 jet at the given point."""
    t = Jet5.variable(at)

    def rec(n):
        if isinstance(n, Num):
            return Jet5.const(n.value)
        if isinstance(n, Var):
            return t
        if isinstance(n, Neg):
            return -rec(n.child)
        if isinstance(n, BinOp):
            return jets.jet_arith(rec(n.left), rec(n.right), _OPNAME[n.op])
        if isinstance(n, Call):
            if n.fn == "pow":
                return jets.powc(rec(n.args[0]), eval_expr_value(n.args[1], 0.0, var))
            return jets.jet_elementary(rec(n.args[0]), n.fn)
        raise TypeError(f"not an AST node: {n!r}")

    return rec(node)


_OPNAME = {"+": "add", "-": "sub", "*": "mul", "/": "div"}


def eval_expr_value(node, at, var: str = "t"):
    """Evaluate an expression on a float or numpy array argument."""

    def rec(n):
        if isinstance(n, Num):
            return n.value
        if isinstance(n, Var):
            return at
        if isinstance(n, Neg):
            return -rec(n.child)
        if isinstance(n, BinOp):
            left, right = rec(n.left), rec(n.right)
            if n.op == "+":
                return left + right
            if n.op == "-":
                return left - right
            if n.op == "*":
                return left * right
            return left / right
        if isinstance(n, Call):
            if n.fn == "pow":
                return rec(n.args[0]) ** rec(n.args[1])
            return getattr(np, n.fn)(rec(n.args[0]))
        raise TypeError(f"not an AST node: {n!r}")

    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        return rec(node)


def eval_jet(cdef: CurveDef, t: float) -> JetPoint:
    """Evaluate every component of a curve as a jet at parameter t."""
    if not (cdef.t_lo <= t <= cdef.t_hi):
        raise GawkCurvesError(
            f"t={t} outside curve domain [{cdef.t_lo}, {cdef.t_hi}]"
        )
    comps = []
    for i, node in enumerate(cdef.components):
        try:
            comps.append(eval_expr_jet(node, t, cdef.var))
        except SingularityError as exc:
            raise SingularityError(f"component x{i + 1} at t={t}: {exc}") from exc
    return JetPoint(comps)
