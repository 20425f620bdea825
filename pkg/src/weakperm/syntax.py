"""Literals, deontic literals, rules, programs and argumentation theories.

Everything here is immutable.  Classical negation is a polarity flag on
:class:`Literal`; negation as failure is not a literal at all but the
``neg`` part of a rule body.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

OBL = "obl"
PERM = "perm"
PERM_W = "perm_w"
DEONTIC_OPS = (OBL, PERM, PERM_W)

LP = "lp"
ARGUMENTATION = "argumentation"

_KIND_RANK = {None: 0, OBL: 1, PERM: 2, PERM_W: 3}


@dataclass(frozen=True)
class Literal:
    atom: str
    negative: bool = False

    def __post_init__(self):
        if not self.atom:
            raise ValueError("empty atom name")

    def complement(self) -> "Literal":
        return Literal(self.atom, not self.negative)

    @property
    def positive(self) -> "Literal":
        return Literal(self.atom) if self.negative else self

    def __str__(self) -> str:
        return f"-{self.atom}" if self.negative else self.atom

    def __repr__(self) -> str:
        return f"Literal({self})"


@dataclass(frozen=True)
class DeonticLiteral:
    op: str
    inner: Literal

    def __post_init__(self):
        if self.op not in DEONTIC_OPS:
            raise ValueError(f"unknown deontic operator {self.op!r}")
        if not isinstance(self.inner, Literal):
            raise ValueError("deontic operators cannot be nested")

    @property
    def atom(self) -> str:
        return self.inner.atom

    def __str__(self) -> str:
        return f"{self.op}({self.inner})"

    def __repr__(self) -> str:
        return f"DeonticLiteral({self})"


ExtLiteral = Union[Literal, DeonticLiteral]


def complement(lit: Literal) -> Literal:
    return lit.complement()


def obl(lit: Literal) -> DeonticLiteral:
    return DeonticLiteral(OBL, lit)


def perm(lit: Literal) -> DeonticLiteral:
    return DeonticLiteral(PERM, lit)


def perm_w(lit: Literal) -> DeonticLiteral:
    return DeonticLiteral(PERM_W, lit)


def literal_key(x: ExtLiteral) -> tuple:
    """Canonical order: atom name, then plain < obl < perm < perm_w, then polarity."""
    if isinstance(x, Literal):
        return (x.atom, 0, x.negative)
    return (x.inner.atom, _KIND_RANK[x.op], x.inner.negative)


def sort_literals(xs: Iterable[ExtLiteral]) -> list:
    return sorted(xs, key=literal_key)


def base_literal(x: ExtLiteral) -> Literal:
    return x if isinstance(x, Literal) else x.inner


@dataclass(frozen=True)
class Rule:
    head: Optional[ExtLiteral]
    pos: frozenset = frozenset()
    neg: frozenset = frozenset()
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "pos", frozenset(self.pos))
        object.__setattr__(self, "neg", frozenset(self.neg))

    @property
    def has_weak_head(self) -> bool:
        return isinstance(self.head, DeonticLiteral) and self.head.op == PERM_W

    @property
    def is_constraint(self) -> bool:
        return self.head is None

    @property
    def is_fact(self) -> bool:
        return self.head is not None and not self.pos and not self.neg

    def literals(self) -> set:
        out = set(self.pos) | set(self.neg)
        if self.head is not None:
            out.add(self.head)
        return out

    def body_str(self, naf: bool = True) -> str:
        items = [str(x) for x in sort_literals(self.pos)]
        if naf:
            items += [f"not {x}" for x in sort_literals(self.neg)]
        return ", ".join(items)

    def __str__(self) -> str:
        head = "" if self.head is None else str(self.head)
        body = self.body_str()
        if self.head is not None and not body:
            return f"{head}."
        if self.head is None:
            return f"<- {body}." if body else "<- ."
        return f"{head} <- {body}."

    def arg_str(self) -> str:
        prefix = f"{self.label}: " if self.label else ""
        body = self.body_str(naf=False)
        return f"{prefix}{body + ' ' if body else ''}=> {self.head}."


def _dedup(rules: Iterable[Rule]) -> tuple:
    seen = set()
    out = []
    for r in rules:
        if r not in seen:
            seen.add(r)
            out.append(r)
    return tuple(out)


@dataclass(frozen=True)
class Program:
    """A set of rules; rule order is kept only for printing."""

    rules: tuple = ()
    kind: str = LP

    def __post_init__(self):
        object.__setattr__(self, "rules", _dedup(self.rules))
        if self.kind == ARGUMENTATION:
            for r in self.rules:
                if r.neg or r.head is None:
                    raise ValueError(f"rule {r} is not an argumentation rule")

    def __iter__(self):
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __eq__(self, other):
        if not isinstance(other, Program):
            return NotImplemented
        return self.kind == other.kind and set(self.rules) == set(other.rules)

    def __hash__(self):
        return hash((self.kind, frozenset(self.rules)))

    def constraints(self) -> list:
        return [r for r in self.rules if r.is_constraint]

    def facts(self) -> set:
        return {r.head for r in self.rules if r.is_fact}

    def __str__(self) -> str:
        return "".join(f"{r}\n" for r in self.rules)


@dataclass(frozen=True)
class DeonticTheory:
    """Facts plus naf-free rules; the input of argument construction."""

    facts: frozenset = frozenset()
    rules: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "facts", frozenset(self.facts))
        object.__setattr__(self, "rules", _dedup(self.rules))
        for f in self.facts:
            if not isinstance(f, Literal):
                raise ValueError(f"fact {f} is not a plain literal")
        for r in self.rules:
            if r.neg:
                raise ValueError(f"rule {r.arg_str()} uses negation as failure")
            if r.head is None:
                raise ValueError("argumentation rules need a head")
            if r.has_weak_head:
                raise ValueError(f"weak permission {r.head} cannot be a rule head")

    def __str__(self) -> str:
        lines = []
        if self.facts:
            lines.append("facts: " + ", ".join(str(f) for f in sort_literals(self.facts)) + ".")
        lines += [r.arg_str() for r in self.rules]
        return "".join(f"{line}\n" for line in lines)


def occurring_literals(p) -> frozenset:
    """Every literal mentioned in ``p``, bare or under an operator, closed under complement."""
    found = set()
    if isinstance(p, DeonticTheory):
        found.update(p.facts)
    for r in p.rules:
        for x in r.literals():
            found.add(base_literal(x))
    return frozenset(found | {l.complement() for l in found})


def herbrand_base(p) -> frozenset:
    """Plain literals that occur bare (with their complements), plus all
    three deontic literals over every literal that occurs under an operator.

    On a deontically augmented program the deontic part covers every
    occurring literal.
    """
    plain = set()
    deontic_over = set()
    for r in p.rules:
        for x in r.literals():
            if isinstance(x, Literal):
                plain.add(x)
            else:
                deontic_over.add(x.inner)
    if isinstance(p, DeonticTheory):
        plain.update(p.facts)
    plain |= {l.complement() for l in plain}
    deontic_over |= {l.complement() for l in deontic_over}
    hb = set(plain)
    for l in deontic_over:
        hb.update(DeonticLiteral(op, l) for op in DEONTIC_OPS)
    return frozenset(hb)


def deontic_axioms(literals: Iterable[Literal]) -> list:
    """Ground instances of the D-axiom, the weak-permission default and the
    two consistency constraints over the given (complement-closed) literals."""
    lits = sort_literals(set(literals) | {l.complement() for l in literals})
    rules = []
    for x in lits:
        rules.append(Rule(perm(x), pos={obl(x)}))
    for x in lits:
        rules.append(Rule(perm_w(x), neg={obl(x.complement())}))
    for x in lits:
        if not x.negative:
            rules.append(Rule(None, pos={obl(x), obl(x.complement())}))
    for x in lits:
        rules.append(Rule(None, pos={obl(x), perm(x.complement())}))
    return rules


def augment_deontic(p: Program, extra: Iterable[Literal] = ()) -> Program:
    if p.kind != LP:
        raise ValueError("only logic programs are deontically augmented")
    lits = set(occurring_literals(p)) | set(extra)
    return Program(tuple(p.rules) + tuple(deontic_axioms(lits)), kind=p.kind)
