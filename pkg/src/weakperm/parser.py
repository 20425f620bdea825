"""Text format for logic programs and argumentation theories.

Logic programs::

    obl(p) <- not obl(-p).
    perm(x) <- obl(x), q.
    <- obl(a), obl(-a).

Argumentation theories::

    facts: distress, proximity.
    r1: distress, proximity => obl(assistance).
    r3: perm(-assistance) => obl(alertAuthorities) & obl(keepClear).

``%`` starts a comment that runs to the end of the line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .syntax import (
    ARGUMENTATION,
    DEONTIC_OPS,
    LP,
    PERM_W,
    DeonticLiteral,
    DeonticTheory,
    Literal,
    Program,
    Rule,
)

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>%[^\n]*)
  | (?P<larrow><-)
  | (?P<rarrow>=>)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[(),.&:\-])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str, source: str = "<input>") -> list:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1, source)
        kind = m.lastgroup
        col = pos - line_start + 1
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind in ("larrow", "rarrow", "ident"):
            tokens.append(Token(kind, m.group(), line, col))
        elif kind == "punct":
            tokens.append(Token(m.group(), m.group(), line, col))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, kind: str, source: str):
        self.tokens = tokenize(text, source)
        self.i = 0
        self.kind = kind
        self.source = source

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok: Token = None):
        tok = tok or self.peek()
        return ParseError(message, tok.line, tok.column, self.source)

    def expect(self, kind: str, what: str = None) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            found = "end of input" if tok.kind == "eof" else repr(tok.text)
            raise self.error(f"expected {what or repr(kind)}, found {found}")
        return self.advance()

    # literals

    def literal(self) -> Literal:
        negative = False
        if self.peek().kind == "-":
            self.advance()
            negative = True
        tok = self.expect("ident", "an atom")
        if tok.text in DEONTIC_OPS and self.peek().kind == "(":
            raise self.error(f"nested deontic operator {tok.text}", tok)
        if not tok.text[0].islower():
            raise self.error(f"atom {tok.text!r} must start with a lowercase letter", tok)
        return Literal(tok.text, negative)

    def extlit(self):
        tok = self.peek()
        if tok.kind == "ident" and tok.text in DEONTIC_OPS and self.peek(1).kind == "(":
            self.advance()
            self.advance()
            inner = self.literal()
            self.expect(")", "')'")
            return DeonticLiteral(tok.text, inner)
        return self.literal()

    def head(self):
        tok = self.peek()
        lit = self.extlit()
        if isinstance(lit, DeonticLiteral) and lit.op == PERM_W:
            raise self.error(f"weak permission {lit} cannot appear in a rule head", tok)
        return lit

    def _at_naf(self) -> bool:
        tok = self.peek()
        return tok.kind == "ident" and tok.text == "not" and self.peek(1).kind in ("ident", "-")

    def body(self, stop: str):
        pos, neg = [], []
        if self.peek().kind == stop:
            return pos, neg
        while True:
            if self._at_naf():
                tok = self.advance()
                if self.kind == ARGUMENTATION:
                    raise self.error("negation as failure is not allowed in argumentation theories", tok)
                neg.append(self.extlit())
            else:
                pos.append(self.extlit())
            if self.peek().kind != ",":
                return pos, neg
            self.advance()

    # statements

    def lp_statement(self) -> Rule:
        if self.peek().kind == "larrow":
            self.advance()
            pos, neg = self.body(".")
            self.expect(".", "'.'")
            return Rule(None, pos, neg)
        head = self.head()
        if self.peek().kind == ".":
            self.advance()
            return Rule(head)
        self.expect("larrow", "'<-' or '.'")
        pos, neg = self.body(".")
        self.expect(".", "'.'")
        return Rule(head, pos, neg)

    def parse_lp(self) -> Program:
        rules = []
        while self.peek().kind != "eof":
            if self.peek().kind == "rarrow" or (self.peek().kind == "ident" and self.peek(1).kind == ":"):
                raise self.error("argumentation syntax in a logic program")
            rules.append(self.lp_statement())
        return Program(tuple(rules), kind=LP)

    def parse_theory(self) -> DeonticTheory:
        facts = None
        rules = []
        while self.peek().kind != "eof":
            tok = self.peek()
            if tok.kind == "larrow":
                raise self.error("'<-' rules belong to logic programs; use '=>'")
            if tok.kind == "ident" and tok.text == "facts" and self.peek(1).kind == ":":
                if facts is not None:
                    raise self.error("duplicate facts declaration")
                self.advance()
                self.advance()
                facts = [self.literal()]
                while self.peek().kind == ",":
                    self.advance()
                    facts.append(self.literal())
                self.expect(".", "'.'")
                continue
            label = None
            if tok.kind == "ident" and self.peek(1).kind == ":":
                label = self.advance().text
                self.advance()
            pos, _ = self.body("rarrow")
            self.expect("rarrow", "'=>'")
            heads = [self.head()]
            while self.peek().kind == "&":
                self.advance()
                heads.append(self.head())
            self.expect(".", "'.'")
            rules.extend(Rule(h, pos, label=label) for h in heads)
        return DeonticTheory(frozenset(facts or ()), tuple(rules))


def detect_kind(text: str) -> str:
    """Guess the file kind from its syntax: ``=>`` or ``facts:`` means argumentation."""
    stripped = re.sub(r"%[^\n]*", "", text)
    if "=>" in stripped or re.search(r"(^|\n)\s*facts\s*:", stripped):
        return ARGUMENTATION
    return LP


def parse_program(text: str, kind: str = LP, source: str = "<input>"):
    if kind not in (LP, ARGUMENTATION):
        raise ValueError(f"unknown program kind {kind!r}")
    parser = _Parser(text, kind, source)
    return parser.parse_lp() if kind == LP else parser.parse_theory()


def parse_literal(text: str):
    """Parse a single (possibly deontic) literal, e.g. ``perm_w(-a)``."""
    parser = _Parser(text, LP, "<literal>")
    lit = parser.extlit()
    parser.expect("eof", "end of literal")
    return lit
