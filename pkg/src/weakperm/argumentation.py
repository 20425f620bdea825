"""Deontic structured argumentation: arguments, attacks and Dung semantics.

Arguments come in four forms:

* ``weak``: the default argument for ``perm_w(l)``, one per occurring literal;
* ``fact``: a fact of the theory;
* ``rule``: a rule applied to one argument per body member;
* ``daxiom``: ``perm(l)`` obtained from an argument for ``obl(l)``.

A conclusion never repeats along a root-to-leaf path, which keeps the
argument set finite when rules are cyclic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Optional

from .errors import BudgetExceeded, NoExtensionsError
from .syntax import (
    OBL,
    PERM,
    PERM_W,
    DeonticLiteral,
    DeonticTheory,
    Literal,
    Rule,
    literal_key,
    obl,
    occurring_literals,
    perm,
    perm_w,
    sort_literals,
)

WEAK = "weak"
FACT = "fact"
RULE = "rule"
DAXIOM = "daxiom"
_FORM_RANK = {WEAK: 0, FACT: 1, RULE: 2, DAXIOM: 3}

SUBARGUMENT = "subargument"
CONCLUSION = "conclusion"

GROUNDED = "grounded"
COMPLETE = "complete"
STABLE = "stable"

DEFAULT_MAX_ARGS = 100_000
DEFAULT_MAX_EXTENSION_NODES = 20


@dataclass(frozen=True)
class Argument:
    form: str
    conclusion: object
    premises: tuple = ()
    rule: Optional[Rule] = None
    id: str = field(default="", compare=False)

    @cached_property
    def subarguments(self) -> frozenset:
        out = {self}
        for p in self.premises:
            out |= p.subarguments
        return frozenset(out)

    @cached_property
    def sub_conclusions(self) -> frozenset:
        return frozenset(a.conclusion for a in self.subarguments)

    @cached_property
    def sort_key(self) -> tuple:
        rule_key = "" if self.rule is None else self.rule.body_str(naf=False)
        return (
            _FORM_RANK[self.form],
            literal_key(self.conclusion),
            rule_key,
            tuple(p.sort_key for p in self.premises),
        )

    def describe(self) -> str:
        if self.form in (WEAK, FACT):
            return str(self.conclusion)
        return f"{', '.join(p.id for p in self.premises)} => {self.conclusion}".lstrip()

    def __str__(self):
        return f"{self.id}: {self.describe()}" if self.id else self.describe()


def build_arguments(t: DeonticTheory, max_args: int = DEFAULT_MAX_ARGS) -> tuple:
    """Least set of arguments closed under the four formation rules.

    Returned in canonical order with ids ``A1``, ``A2``, ...
    """
    found: dict = {}
    by_conclusion: dict = {}

    def add(arg: Argument) -> bool:
        if arg in found:
            return False
        if len(found) >= max_args:
            raise BudgetExceeded("argument construction", len(found) + 1, max_args)
        found[arg] = arg
        by_conclusion.setdefault(arg.conclusion, []).append(arg)
        return True

    for l in sort_literals(occurring_literals(t)):
        add(Argument(WEAK, perm_w(l)))
    for f in sort_literals(t.facts):
        add(Argument(FACT, f))

    rules = [(r, sort_literals(r.pos)) for r in t.rules]
    changed = True
    while changed:
        changed = False
        for r, body in rules:
            pools = [list(by_conclusion.get(b, ())) for b in body]
            for combo in itertools.product(*pools):
                if any(r.head in p.sub_conclusions for p in combo):
                    continue
                changed |= add(Argument(RULE, r.head, tuple(combo), r))
        for a in list(found):
            c = a.conclusion
            if isinstance(c, DeonticLiteral) and c.op == OBL:
                target = perm(c.inner)
                if target not in a.sub_conclusions:
                    changed |= add(Argument(DAXIOM, target, (a,)))

    ordered = sorted(found, key=lambda a: a.sort_key)
    ids = {a: f"A{k}" for k, a in enumerate(ordered, 1)}
    rebuilt: dict = {}

    def relabel(a: Argument) -> Argument:
        if a not in rebuilt:
            prem = tuple(relabel(p) for p in a.premises)
            rebuilt[a] = Argument(a.form, a.conclusion, prem, a.rule, ids[a])
        return rebuilt[a]

    return tuple(relabel(a) for a in ordered)


def attacks(a: Argument, b: Argument, reading: str = SUBARGUMENT) -> bool:
    """Whether ``a`` attacks ``b``.

    With ``reading="subargument"`` the rebuttal conditions on plain,
    obligation and permission conclusions also hit every sub-argument of
    ``b`` (undercut).  ``reading="conclusion"`` checks ``b``'s own
    conclusion only.  Weak-permission defaults are hit only on themselves.
    """
    ca = a.conclusion
    cb = b.conclusion
    if b.form == WEAK and isinstance(ca, DeonticLiteral) and ca.op == OBL:
        if ca.inner == cb.inner.complement():
            return True
    targets = b.sub_conclusions if reading == SUBARGUMENT else (cb,)
    if isinstance(ca, Literal):
        return ca.complement() in targets
    opposite = ca.inner.complement()
    if ca.op == OBL:
        return obl(opposite) in targets or perm(opposite) in targets
    if ca.op == PERM:
        return obl(opposite) in targets
    return False


@dataclass(frozen=True)
class AttackGraph:
    nodes: tuple
    edges: frozenset

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "edges", frozenset(self.edges))

    @cached_property
    def attackers(self) -> dict:
        out = {n: set() for n in self.nodes}
        for x, y in self.edges:
            out[y].add(x)
        return out

    @cached_property
    def targets(self) -> dict:
        out = {n: set() for n in self.nodes}
        for x, y in self.edges:
            out[x].add(y)
        return out

    @cached_property
    def position(self) -> dict:
        return {n: k for k, n in enumerate(self.nodes)}

    def conflict_free(self, s: Iterable) -> bool:
        s = set(s)
        return not any(self.targets[x] & s for x in s)

    def acceptable(self, x: Hashable, s: Iterable) -> bool:
        s = set(s)
        return all(self.attackers[y] & s for y in self.attackers[x])

    def is_admissible(self, s) -> bool:
        return self.conflict_free(s) and all(self.acceptable(x, s) for x in s)

    def is_complete(self, s) -> bool:
        s = set(s)
        if not self.is_admissible(s):
            return False
        return all(x in s for x in self.nodes if self.acceptable(x, s))

    def is_stable(self, s) -> bool:
        s = set(s)
        return self.conflict_free(s) and all(self.attackers[y] & s for y in self.nodes if y not in s)


def build_attack_graph(arguments: Iterable[Argument], reading: str = SUBARGUMENT) -> AttackGraph:
    args = tuple(arguments)
    edges = {(a, b) for a in args for b in args if attacks(a, b, reading)}
    return AttackGraph(args, frozenset(edges))


@dataclass(frozen=True)
class Extension:
    members: frozenset
    semantics: str

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members

    def ordered(self, g: AttackGraph) -> list:
        return sorted(self.members, key=g.position.__getitem__)


def _ext_key(g: AttackGraph, members) -> tuple:
    pos = sorted(g.position[x] for x in members)
    return (len(pos), pos)


def grounded_extension(g: AttackGraph) -> Extension:
    """Least fixpoint of the characteristic function, iterated from the empty set."""
    s: set = set()
    while True:
        nxt = {x for x in g.nodes if all(g.attackers[y] & s for y in g.attackers[x])}
        if nxt == s:
            return Extension(frozenset(s), GROUNDED)
        s = nxt


def _search(g: AttackGraph, stable: bool, cap: int, what: str):
    """Backtracking over in/out labels for the nodes not fixed by the grounded
    extension.  Prunes conflicts eagerly; checks the semantics at the leaves.
    ``cap`` bounds the number of undecided nodes."""
    ground = set(grounded_extension(g).members)
    out_ = {y for x in ground for y in g.targets[x]}
    free = [x for x in g.nodes if x not in ground and x not in out_ and x not in g.targets[x]]
    if len(free) > cap:
        raise BudgetExceeded(what, len(free), cap)
    results = []

    def rec(k: int, chosen: set):
        if k == len(free):
            if (g.is_stable(chosen) if stable else g.is_complete(chosen)):
                results.append(frozenset(chosen))
            return
        x = free[k]
        if not (g.targets[x] & chosen) and not (g.attackers[x] & chosen):
            chosen.add(x)
            rec(k + 1, chosen)
            chosen.remove(x)
        rec(k + 1, chosen)

    rec(0, set(ground))
    return results


def complete_extensions(g: AttackGraph, max_nodes: int = DEFAULT_MAX_EXTENSION_NODES) -> list:
    found = _search(g, False, max_nodes, "complete extension search (undecided arguments)")
    return [Extension(m, COMPLETE) for m in sorted(found, key=lambda m: _ext_key(g, m))]


def stable_extensions(g: AttackGraph, max_nodes: int = DEFAULT_MAX_EXTENSION_NODES) -> list:
    found = _search(g, True, max_nodes, "stable extension search (undecided arguments)")
    return [Extension(m, STABLE) for m in sorted(found, key=lambda m: _ext_key(g, m))]


def extensions(g: AttackGraph, semantics: str, max_nodes: int = DEFAULT_MAX_EXTENSION_NODES) -> list:
    if semantics == GROUNDED:
        return [grounded_extension(g)]
    if semantics == COMPLETE:
        return complete_extensions(g, max_nodes)
    if semantics == STABLE:
        return stable_extensions(g, max_nodes)
    raise ValueError(f"unknown semantics {semantics!r}")


def justified_conclusions_of(exts: list) -> frozenset:
    if not exts:
        raise NoExtensionsError("no extensions under the chosen semantics")
    return frozenset.intersection(*(frozenset(a.conclusion for a in e) for e in exts))


def justified_arguments_of(exts: list) -> frozenset:
    if not exts:
        raise NoExtensionsError("no extensions under the chosen semantics")
    return frozenset.intersection(*(e.members for e in exts))


def justified_conclusions(t: DeonticTheory, semantics: str = GROUNDED, reading: str = SUBARGUMENT,
                          max_args: int = DEFAULT_MAX_ARGS,
                          max_nodes: int = DEFAULT_MAX_EXTENSION_NODES) -> frozenset:
    """Conclusions carried by some argument in every extension."""
    g = build_attack_graph(build_arguments(t, max_args), reading)
    return justified_conclusions_of(extensions(g, semantics, max_nodes))


def conflictual_literals(t: DeonticTheory, arguments: Optional[Iterable[Argument]] = None) -> frozenset:
    """Literals ``c`` with applicable rules for both obl(c) and obl(-c).

    A rule is applicable when every body member is the conclusion of some
    argument.  Reported by the positive literal.
    """
    args = build_arguments(t) if arguments is None else arguments
    supported = {a.conclusion for a in args}
    heads = set()
    for r in t.rules:
        h = r.head
        if isinstance(h, DeonticLiteral) and h.op == OBL and r.pos <= supported:
            heads.add(h.inner)
    return frozenset(l.positive for l in heads if l.complement() in heads)


def arguments_by_id(arguments: Iterable[Argument]) -> dict:
    return {a.id: a for a in arguments}
