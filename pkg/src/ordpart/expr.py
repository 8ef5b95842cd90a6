"""Surface syntax for ordinal expressions.

Grammar (``^`` binds tightest and associates to the right)::

    expr   := term ("+" term)*
    term   := factor ("*" factor)*
    factor := atom ("^" factor)?
    atom   := "w" | NAT | "(" expr ")"

``ω`` is accepted as a synonym for ``w``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Union

from .ordinal import OMEGA, Ordinal, add, from_natural, mul, pow

__all__ = [
    "ExprSyntaxError",
    "Num",
    "Omega",
    "BinOp",
    "OrdExpr",
    "tokenize",
    "parse",
    "evaluate",
    "parse_ordinal",
    "render",
]


class ExprSyntaxError(ValueError):
    def __init__(self, text: str, offset: int, expected: str, found: str):
        self.text = text
        self.offset = offset
        self.expected = expected
        self.found = found
        super().__init__(f"syntax error at offset {offset}: expected {expected}, found {found}")


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Omega:
    pass


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "OrdExpr"
    right: "OrdExpr"


OrdExpr = Union[Num, Omega, BinOp]

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<omega>[wω])|(?P<op>[-+*^()]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "w", one of "+*^()", or "end"
    text: str
    offset: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.group("op") == "-":
            raise ExprSyntaxError(text, pos, "number, 'w', operator or parenthesis", repr(text[pos]))
        start = m.start(m.lastgroup)
        if m.group("num") is not None:
            tokens.append(Token("num", m.group("num"), start))
        elif m.group("omega") is not None:
            tokens.append(Token("w", m.group("omega"), start))
        else:
            tokens.append(Token(m.group("op"), m.group("op"), start))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.i]

    def fail(self, expected: str):
        tok = self.peek
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ExprSyntaxError(self.text, tok.offset, expected, found)

    def take(self, kind: str) -> Token:
        tok = self.peek
        if tok.kind != kind:
            self.fail(repr(kind))
        self.i += 1
        return tok

    def expr(self) -> OrdExpr:
        node = self.term()
        while self.peek.kind == "+":
            self.i += 1
            node = BinOp("+", node, self.term())
        return node

    def term(self) -> OrdExpr:
        node = self.factor()
        while self.peek.kind == "*":
            self.i += 1
            node = BinOp("*", node, self.factor())
        return node

    def factor(self) -> OrdExpr:
        base = self.atom()
        if self.peek.kind == "^":
            self.i += 1
            return BinOp("^", base, self.factor())
        return base

    def atom(self) -> OrdExpr:
        tok = self.peek
        if tok.kind == "num":
            self.i += 1
            return Num(int(tok.text))
        if tok.kind == "w":
            self.i += 1
            return Omega()
        if tok.kind == "(":
            self.i += 1
            node = self.expr()
            self.take(")")
            return node
        self.fail("number, 'w' or '('")


def parse(text: str) -> OrdExpr:
    p = _Parser(text)
    node = p.expr()
    if p.peek.kind != "end":
        p.fail("'+', '*', '^' or end of input")
    return node


_OPS = {"+": add, "*": mul, "^": pow}


def evaluate(node: OrdExpr) -> Ordinal:
    if isinstance(node, Num):
        return from_natural(node.value)
    if isinstance(node, Omega):
        return OMEGA
    return _OPS[node.op](evaluate(node.left), evaluate(node.right))


def parse_ordinal(text: str) -> Ordinal:
    return evaluate(parse(text))


def render(a: Ordinal, unicode: bool = False) -> str:
    """Canonical CNF text, e.g. ``w^(w + 1)*3 + w``."""
    if a.is_zero:
        return "0"
    w = "ω" if unicode else "w"
    parts = []
    for exp, coef in a.terms:
        if exp.is_zero:
            parts.append(str(coef))
            continue
        if exp == 1:
            head = w
        elif exp.is_finite or exp == OMEGA:
            head = f"{w}^{render(exp, unicode)}"
        else:
            head = f"{w}^({render(exp, unicode)})"
        parts.append(head if coef == 1 else f"{head}*{coef}")
    return " + ".join(parts)
