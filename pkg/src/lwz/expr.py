"""Expression language for paraholomorphic Weierstrass data.

Grammar (``^`` binds tighter than unary minus, which binds tighter than
``*`` and ``/``)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := NUMBER ['j'] | 'j' | 'z' | FUNC '(' expr ')' | '(' expr ')'
    FUNC   := 'pexp' | 'pcos' | 'psin' | 'ptan'

There is deliberately no conjugation, so every expression is paraholomorphic
wherever it is defined.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import ExprSyntaxError
from .paracomplex import FUNCTIONS, Jet2, SplitComplex, as_split


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Lit:
    value: SplitComplex


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Node"


Node = Union[Var, Lit, BinOp, Neg, Pow, Call]

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?j?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str  # 'number', 'name', or the operator character, or 'end'
    text: str
    offset: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", _byte(text, pos))
        kind = m.lastgroup
        if kind != "ws":
            tok_kind = m.group() if kind == "op" else kind
            tokens.append(_Token(tok_kind, m.group(), _byte(text, pos)))
        pos = m.end()
    tokens.append(_Token("end", "", _byte(text, len(text))))
    return tokens


def _byte(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


_ATOM_START = {"number", "j", "z", "(", *FUNCTIONS}


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def fail(self, expected):
        t = self.tok
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise ExprSyntaxError(f"unexpected {found}", t.offset, expected)

    def expect(self, kind: str) -> _Token:
        if self.tok.kind != kind:
            self.fail({kind})
        return self.advance()

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "end":
            self.fail({"+", "-", "*", "/", "^", "end"})
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.tok.kind in ("+", "-"):
            op = self.advance().kind
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.tok.kind in ("*", "/"):
            op = self.advance().kind
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Node:
        if self.tok.kind == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.tok.kind == "^":
            self.advance()
            sign = 1
            if self.tok.kind == "-":
                self.advance()
                sign = -1
            t = self.tok
            if t.kind != "number" or not t.text.isdigit():
                self.fail({"integer"})
            self.advance()
            return Pow(base, sign * int(t.text))
        return base

    def atom(self) -> Node:
        t = self.tok
        if t.kind == "number":
            self.advance()
            if t.text.endswith("j"):
                return Lit(SplitComplex(0.0, float(t.text[:-1])))
            return Lit(SplitComplex(float(t.text), 0.0))
        if t.kind == "name":
            if t.text == "z":
                self.advance()
                return Var()
            if t.text == "j":
                self.advance()
                return Lit(SplitComplex(0.0, 1.0))
            if t.text in FUNCTIONS:
                self.advance()
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(t.text, arg)
            raise ExprSyntaxError(f"unknown name {t.text!r}", t.offset, _ATOM_START)
        if t.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        self.fail(_ATOM_START)


def parse(text: str) -> Node:
    """Parse expression text into an immutable AST."""
    return _Parser(text).parse()


def _fmt(x: float) -> str:
    return repr(float(x))


def _lit_text(value: SplitComplex) -> tuple[str, int]:
    re_, im_ = float(value.re), float(value.im)
    if im_ == 0.0 and re_ >= 0.0 and not _neg_zero(re_):
        return _fmt(re_), 4
    if re_ == 0.0 and im_ >= 0.0 and not _neg_zero(re_) and not _neg_zero(im_):
        return ("j" if im_ == 1.0 else _fmt(im_) + "j"), 4
    # non-canonical literal (built programmatically, never produced by parse)
    parts = []
    if re_ != 0.0:
        parts.append(_fmt(abs(re_)) if re_ > 0 else f"-{_fmt(-re_)}")
    if im_ != 0.0 or not parts:
        sign = "-" if im_ < 0 else ("+" if parts else "")
        parts.append(f"{sign}{_fmt(abs(im_))}j")
    return "(" + "".join(parts) + ")", 4


def _neg_zero(x: float) -> bool:
    return x == 0.0 and str(x).startswith("-")


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def to_text(node: Node) -> str:
    """Canonical text form; ``parse(to_text(parse(s))) == parse(s)``."""
    return _print(node)[0]


def _print(node: Node) -> tuple[str, int]:
    # returns (text, precedence): 1 additive, 2 multiplicative, 3 unary, 4 atom/power
    if isinstance(node, Var):
        return "z", 4
    if isinstance(node, Lit):
        return _lit_text(node.value)
    if isinstance(node, Call):
        return f"{node.func}({_print(node.arg)[0]})", 4
    if isinstance(node, Pow):
        text, prec = _print(node.base)
        if prec < 4 or isinstance(node.base, Pow) or text.startswith("-"):
            text = f"({text})"
        return f"{text}^{node.exponent}", 4
    if isinstance(node, Neg):
        text, prec = _print(node.operand)
        if prec < 3:
            text = f"({text})"
        return f"-{text}", 3
    if isinstance(node, BinOp):
        prec = _PREC[node.op]
        left, lp = _print(node.left)
        right, rp = _print(node.right)
        if lp < prec:
            left = f"({left})"
        # left-associative: an equal-precedence right operand needs parentheses
        if rp <= prec:
            right = f"({right})"
        return f"{left} {node.op} {right}", prec
    raise TypeError(f"not an expression node: {node!r}")


def eval_jet(node: Node, z) -> Jet2:
    """Evaluate value, first and second derivative of ``node`` at ``z``.

    ``z`` may hold numpy arrays; evaluation is then elementwise.
    """
    z = as_split(z)
    return _eval(node, z)


def _eval(node: Node, z: SplitComplex) -> Jet2:
    if isinstance(node, Var):
        return Jet2.variable(z)
    if isinstance(node, Lit):
        zero = z * 0.0
        return Jet2(zero + node.value, zero, zero)
    if isinstance(node, BinOp):
        a, b = _eval(node.left, z), _eval(node.right, z)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        return a / b
    if isinstance(node, Neg):
        return -_eval(node.operand, z)
    if isinstance(node, Pow):
        return _eval(node.base, z) ** node.exponent
    if isinstance(node, Call):
        inner = _eval(node.arg, z)
        return inner.compose(FUNCTIONS[node.func](inner.f))
    raise TypeError(f"not an expression node: {node!r}")


def as_expr(value) -> Node:
    """Accept expression text, an AST node, or a split-complex constant."""
    if isinstance(value, (Var, Lit, BinOp, Neg, Pow, Call)):
        return value
    if isinstance(value, str):
        return parse(value)
    return Lit(as_split(value))


# small builders used when deriving new data from old (duality, Lopez-Ros, ...)

def lit(value) -> Lit:
    return Lit(as_split(value))


def mul(a, b) -> Node:
    return BinOp("*", as_expr(a), as_expr(b))


def add(a, b) -> Node:
    return BinOp("+", as_expr(a), as_expr(b))


def sub(a, b) -> Node:
    return BinOp("-", as_expr(a), as_expr(b))


def div(a, b) -> Node:
    return BinOp("/", as_expr(a), as_expr(b))
