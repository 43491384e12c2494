"""Coordinate expressions for integer-indexed point families.

Grammar::

    expr   = term {("+" | "-") term}
    term   = factor {("*" | "/") factor}
    factor = ["-"] (integer | index | "(" expr ")")

Evaluation is exact over `Fraction`.
"""
from dataclasses import dataclass
from fractions import Fraction

from ..errors import SpecError


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    line: int
    column: int


def tokenize(text):
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line, col = line + 1, 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], line, start_col))
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("name", text[i:j], line, start_col))
        elif ch in "+-*/()":
            j = i + 1
            tokens.append(Token("op", ch, line, start_col))
        else:
            raise SpecError(f"unexpected character {ch!r}", line, start_col)
        col += j - i
        i = j
    tokens.append(Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text, index):
        self.tokens = tokenize(text)
        self.pos = 0
        self.index = index

    @property
    def tok(self):
        return self.tokens[self.pos]

    def error(self, message):
        t = self.tok
        where = "end of input" if t.kind == "end" else repr(t.text)
        raise SpecError(f"{message} at {where}", t.line, t.column)

    def advance(self):
        t = self.tok
        self.pos += 1
        return t

    def parse(self):
        e = self.expr()
        if self.tok.kind != "end":
            self.error("unexpected token")
        return e

    def expr(self):
        e = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            e = BinOp(op, e, self.term())
        return e

    def term(self):
        e = self.factor()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.advance().text
            e = BinOp(op, e, self.factor())
        return e

    def factor(self):
        if self.tok.kind == "op" and self.tok.text == "-":
            self.advance()
            return Neg(self.primary())
        return self.primary()

    def primary(self):
        t = self.tok
        if t.kind == "int":
            self.advance()
            return Num(int(t.text))
        if t.kind == "name":
            if self.index is not None and t.text != self.index:
                self.error("unknown identifier")
            self.advance()
            return Var(t.text)
        if t.kind == "op" and t.text == "(":
            self.advance()
            e = self.expr()
            if not (self.tok.kind == "op" and self.tok.text == ")"):
                self.error("expected ')'")
            self.advance()
            return e
        self.error("syntax error")


def parse_expr(text, index=None):
    """Parse `text`; if `index` is given, it is the only identifier allowed."""
    return _Parser(text, index).parse()


def evaluate(e, k):
    """Value of `e` with the index variable bound to integer `k`.

    Raises ZeroDivisionError when a divisor evaluates to zero.
    """
    if isinstance(e, Num):
        return Fraction(e.value)
    if isinstance(e, Var):
        return Fraction(k)
    if isinstance(e, Neg):
        return -evaluate(e.operand, k)
    a = evaluate(e.left, k)
    b = evaluate(e.right, k)
    if e.op == "+":
        return a + b
    if e.op == "-":
        return a - b
    if e.op == "*":
        return a * b
    return a / b


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def to_text(e):
    """Minimal-parenthesis text that parses back to the same tree."""
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Neg):
        inner = to_text(e.operand)
        if not isinstance(e.operand, (Num, Var)):
            inner = f"({inner})"
        return f"-{inner}"
    prec = _PREC[e.op]
    left = to_text(e.left)
    if isinstance(e.left, BinOp) and _PREC[e.left.op] < prec:
        left = f"({left})"
    right = to_text(e.right)
    # left associativity: an equal-precedence right operand needs parentheses
    if isinstance(e.right, BinOp) and _PREC[e.right.op] <= prec:
        right = f"({right})"
    return f"{left} {e.op} {right}"
