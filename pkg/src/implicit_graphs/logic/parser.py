"""Recursive-descent parser for the formula DSL.

Grammar, loosest binding first::

    formula := imp ('<->' imp)*
    imp     := disj ('->' imp)?
    disj    := conj ('|' conj)*
    conj    := unary ('&' unary)*
    unary   := '!' unary | ('exists' | 'forall') IDENT+ '.' formula | primary
    primary := term REL term | '(' formula ')'
    term    := prod ('+' prod)*
    prod    := factor ('*' factor)*
    factor  := IDENT | '(' term ')'
    REL     := '<' | '<=' | '=' | '!=' | '>' | '>='

A quantifier body extends as far to the right as possible.  Free variables
are ``x1 .. x2k``; ``y1 .. yk`` are aliases for ``x(k+1) .. x2k``.  The
sugar relations and connectives are rewritten at parse time into
``<``, ``=``, ``!``, ``&``, ``|``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ParseError
from .formula import (Add, And, Eq, Exists, Forall, Formula, Lt, Mul, Not, Or, Var,
                      free_name, rename_free)

_UNICODE = {"¬": "!", "∧": "&", "∨": "|", "→": "->", "↔": "<->", "≤": "<=", "≥": ">=",
            "≠": "!=", "∃": "exists", "∀": "forall", "·": "*"}

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op><->|->|<=|>=|!=|[<>=!&|+*().])
  | (?P<uni>[¬∧∨→↔≤≥≠∃∀·])
""", re.VERBOSE)

_KEYWORDS = {"exists", "forall"}
_RELS = {"<", "<=", "=", "!=", ">", ">="}


@dataclass
class Token:
    kind: str  # 'ident', 'op', 'end'
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line=line, column=pos - line_start + 1)
        kind = m.lastgroup
        value = m.group()
        col = pos - line_start + 1
        if kind == "ident":
            tokens.append(Token("ident", value, line, col))
        elif kind == "op":
            tokens.append(Token("op", value, line, col))
        elif kind == "uni":
            mapped = _UNICODE[value]
            tokens.append(Token("ident" if mapped in _KEYWORDS else "op", mapped, line, col))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            line_start = pos + value.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("end", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.pos = 0
        self.scope: list[str] = []
        self.free: dict[str, Token] = {}
        self.furthest: ParseError | None = None

    @property
    def tok(self) -> Token:
        return self.toks[self.pos]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        err = ParseError(msg, line=tok.line, column=tok.col)
        if self.furthest is None or (tok.line, tok.col) > (self.furthest.line, self.furthest.column):
            self.furthest = err
        return err

    def accept(self, text):
        if self.tok.kind == "op" and self.tok.text == text:
            self.pos += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            shown = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {shown!r}")

    def parse(self):
        node = self.formula()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return node

    def formula(self):
        left = self.imp()
        while self.accept("<->"):
            right = self.imp()
            left = And((Or((Not(left), right)), Or((Not(right), left))))
        return left

    def imp(self):
        left = self.disj()
        if self.accept("->"):
            right = self.imp()
            return Or((Not(left), right))
        return left

    def disj(self):
        args = [self.conj()]
        while self.accept("|"):
            args.append(self.conj())
        return args[0] if len(args) == 1 else Or(tuple(args))

    def conj(self):
        args = [self.unary()]
        while self.accept("&"):
            args.append(self.unary())
        return args[0] if len(args) == 1 else And(tuple(args))

    def unary(self):
        if self.accept("!"):
            return Not(self.unary())
        tok = self.tok
        if tok.kind == "ident" and tok.text in _KEYWORDS:
            self.pos += 1
            names = []
            while self.tok.kind == "ident" and self.tok.text not in _KEYWORDS:
                names.append(self.tok.text)
                self.pos += 1
            if not names:
                raise self.error(f"expected a variable after {tok.text!r}")
            self.expect(".")
            self.scope.extend(names)
            try:
                body = self.formula()
            finally:
                del self.scope[len(self.scope) - len(names):]
            quant = Exists if tok.text == "exists" else Forall
            for name in reversed(names):
                body = quant(name, body)
            return body
        return self.primary()

    def primary(self):
        start = self.pos
        free_before = dict(self.free)
        try:
            return self.atom()
        except ParseError:
            if self.toks[start].text != "(":
                raise
            self.pos = start
            self.free = free_before
        self.expect("(")
        node = self.formula()
        self.expect(")")
        return node

    def atom(self):
        left = self.term()
        tok = self.tok
        if tok.kind != "op" or tok.text not in _RELS:
            raise self.error(f"expected a relation, found {tok.text or 'end of input'!r}")
        self.pos += 1
        right = self.term()
        rel = tok.text
        if rel == "<":
            return Lt(left, right)
        if rel == "=":
            return Eq(left, right)
        if rel == ">":
            return Lt(right, left)
        if rel == "<=":
            return Or((Lt(left, right), Eq(left, right)))
        if rel == ">=":
            return Or((Lt(right, left), Eq(left, right)))
        return Not(Eq(left, right))

    def term(self):
        left = self.prod()
        while self.accept("+"):
            left = Add(left, self.prod())
        return left

    def prod(self):
        left = self.factor()
        while self.accept("*"):
            left = Mul(left, self.factor())
        return left

    def factor(self):
        tok = self.tok
        if self.accept("("):
            t = self.term()
            self.expect(")")
            return t
        if tok.kind == "ident" and tok.text not in _KEYWORDS:
            self.pos += 1
            if tok.text not in self.scope:
                self.free.setdefault(tok.text, tok)
            return Var(tok.text)
        raise self.error(f"expected a variable, found {tok.text or 'end of input'!r}")


_X = re.compile(r"x([1-9][0-9]*)\Z")
_Y = re.compile(r"y([1-9][0-9]*)\Z")


def parse_formula(text: str, k: int | None = None, nvars: int | None = None) -> Formula:
    """Parse DSL text into a :class:`Formula`.

    ``k`` (or equivalently ``nvars = 2k``) fixes the number of free variables.
    Without it, ``k`` is the largest ``y`` index or ``x`` index when any
    ``y`` alias occurs, and otherwise half the largest ``x`` index rounded up.
    """
    if nvars is not None:
        if nvars % 2:
            raise ParseError(f"odd free-variable count {nvars}; label decoders need 2k variables")
        if k is not None and k != nvars // 2:
            raise ParseError(f"k={k} contradicts nvars={nvars}")
        k = nvars // 2
    p = _Parser(text)
    try:
        body = p.parse()
    except ParseError:
        raise p.furthest or ParseError("syntax error") from None

    xs, ys = {}, {}
    for name, tok in p.free.items():
        mx, my = _X.match(name), _Y.match(name)
        if mx:
            xs[name] = (int(mx.group(1)), tok)
        elif my:
            ys[name] = (int(my.group(1)), tok)
        else:
            raise ParseError(f"unknown identifier {name!r}", line=tok.line, column=tok.col)
    max_x = max((i for i, _ in xs.values()), default=0)
    max_y = max((i for i, _ in ys.values()), default=0)
    if k is None:
        k = max(max_x, max_y) if ys else max(1, (max_x + 1) // 2)
    if k < 1:
        raise ParseError(f"k must be >= 1, got {k}")
    mapping = {}
    for name, (i, tok) in xs.items():
        if i > 2 * k:
            raise ParseError(f"variable {name} exceeds x{2 * k} (k={k})", line=tok.line, column=tok.col)
    for name, (i, tok) in ys.items():
        if i > k:
            raise ParseError(f"variable {name} exceeds y{k} (k={k})", line=tok.line, column=tok.col)
        mapping[name] = free_name(k + i)
    if mapping:
        body = rename_free(body, mapping)
    return Formula(body, k)
