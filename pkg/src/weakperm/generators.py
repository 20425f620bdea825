"""Seeded random programs, theories and attack graphs for property checks."""

from __future__ import annotations

import random

from .argumentation import AttackGraph, build_arguments
from .errors import BudgetExceeded
from .syntax import (
    DEONTIC_OPS,
    OBL,
    PERM,
    DeonticLiteral,
    DeonticTheory,
    Literal,
    Program,
    Rule,
    augment_deontic,
    herbrand_base,
    obl,
)

_HEAD_OPS = (None, OBL, PERM)


def _lit(rng: random.Random, atoms) -> Literal:
    return Literal(rng.choice(atoms), rng.random() < 0.5)


def _ext(rng: random.Random, atoms, ops=(None,) + DEONTIC_OPS):
    op = rng.choice(ops)
    lit = _lit(rng, atoms)
    return lit if op is None else DeonticLiteral(op, lit)


def _body(rng, atoms, ops, max_pos=2, max_neg=2):
    pos = {_ext(rng, atoms, ops) for _ in range(rng.randint(0, max_pos))}
    neg = {_ext(rng, atoms, ops) for _ in range(rng.randint(0, max_neg))}
    return pos, neg


def random_raw_program(rng: random.Random, max_hb: int = 10, max_rules: int = 8) -> Program:
    """A program run without the deontic axioms, Herbrand base at most ``max_hb``.

    Each atom is used either bare (2 base members) or only under
    operators (6 base members).
    """
    while True:
        plain = [f"p{k}" for k in range(rng.randint(0, max_hb // 2))]
        budget = max_hb - 2 * len(plain)
        deontic = [f"d{k}" for k in range(rng.randint(0, budget // 6))]
        if not plain and not deontic:
            continue
        rules = []
        for _ in range(rng.randint(1, max_rules)):
            def item():
                if deontic and (not plain or rng.random() < 0.5):
                    return _ext(rng, deontic, DEONTIC_OPS)
                return _lit(rng, plain)

            head = None if rng.random() < 0.1 else item()
            if isinstance(head, DeonticLiteral) and head.op not in _HEAD_OPS:
                head = DeonticLiteral(OBL, head.inner)
            pos = {item() for _ in range(rng.randint(0, 2))}
            neg = {item() for _ in range(rng.randint(0, 2))}
            rules.append(Rule(head, pos, neg))
        p = Program(tuple(rules))
        if len(herbrand_base(p)) <= max_hb:
            return p


def random_deontic_program(rng: random.Random, max_rules: int = 5) -> Program:
    """An augmented program over a single atom (Herbrand base of 6 or 8)."""
    atoms = ["x"]
    rules = []
    for _ in range(rng.randint(1, max_rules)):
        head = None if rng.random() < 0.1 else _ext(rng, atoms, _HEAD_OPS)
        pos, neg = _body(rng, atoms, (None,) + DEONTIC_OPS)
        rules.append(Rule(head, pos, neg))
    return augment_deontic(Program(tuple(rules)))


def _one_sided(rng: random.Random, atoms) -> dict:
    """Fix one obligation polarity per atom so no accidental conflict arises."""
    return {a: rng.random() < 0.5 for a in atoms}


def _fix_head(head, sides: dict):
    if isinstance(head, DeonticLiteral) and head.op == OBL:
        return obl(Literal(head.atom, sides[head.atom]))
    return head


def random_conflicted_program(rng: random.Random, max_atoms: int = 4, max_rules: int = 12) -> tuple:
    """An augmented program with at least one conflicted literal.

    Returns ``(program, conflicted_atoms)``.  The obligations over a
    conflicted atom have no rules besides the mutual pair and no other
    constraint mentions them, so the conflict stays unresolved.  Rules over
    background atoms are arbitrary except that obligations take one
    polarity per atom; observer rules read the conflicted atoms and derive
    plain literals nobody else reads.
    """
    n_atoms = rng.randint(1, max_atoms)
    n_conf = rng.randint(1, min(2, n_atoms))
    rest = n_atoms - n_conf
    n_obs = rng.randint(0, rest)
    conf = [f"c{k}" for k in range(n_conf)]
    obs = [f"o{k}" for k in range(n_obs)]
    back = [f"b{k}" for k in range(rest - n_obs)]

    sides = _one_sided(rng, back)
    rules = []
    for c in conf:
        l = Literal(c)
        rules.append(Rule(obl(l), neg={obl(l.complement())}))
        rules.append(Rule(obl(l.complement()), neg={obl(l)}))
    room = max_rules - len(rules)
    for _ in range(rng.randint(0, room)):
        if back and (not obs or rng.random() < 0.6):
            head = None if rng.random() < 0.1 else _fix_head(_ext(rng, back, _HEAD_OPS), sides)
            pos, neg = _body(rng, back, (None,) + DEONTIC_OPS)
        elif obs:
            head = _lit(rng, obs)
            pos, neg = _body(rng, conf + back, (None,) + DEONTIC_OPS)
        else:
            break
        rules.append(Rule(head, pos, neg))
    return augment_deontic(Program(tuple(rules))), frozenset(Literal(c) for c in conf)


def random_conflictual_theory(rng: random.Random, max_atoms: int = 4, max_rules: int = 6,
                              max_args: int = 20) -> DeonticTheory:
    """A theory whose only conflictual literal is ``c``, with both obligation
    rules applicable from facts.  Other rules are random but put obligations
    on one polarity per atom.  Draws yielding more than ``max_args``
    arguments are discarded."""
    while True:
        t = _conflictual_draw(rng, max_atoms, max_rules)
        try:
            build_arguments(t, max_args)
        except BudgetExceeded:
            continue
        return t


def _conflictual_draw(rng, max_atoms, max_rules):
    atoms = [f"a{k}" for k in range(rng.randint(1, max_atoms - 1))]
    sides = _one_sided(rng, atoms)
    facts = {_lit(rng, atoms) for _ in range(rng.randint(0, 2))}
    c = Literal("c")
    support = sorted(facts, key=str)

    def conflict_body():
        if support and rng.random() < 0.5:
            return {rng.choice(support)}
        return set()

    rules = [Rule(obl(c), conflict_body(), label="r1"),
             Rule(obl(c.complement()), conflict_body(), label="r2")]
    pool = atoms + ["c"]
    for k in range(rng.randint(0, max_rules - 2)):
        head = _fix_head(_ext(rng, atoms, _HEAD_OPS), sides)
        pos = {_ext(rng, pool) for _ in range(rng.randint(0, 2))}
        rules.append(Rule(head, pos, label=f"r{k + 3}"))
    return DeonticTheory(frozenset(facts), tuple(rules))


def random_attack_graph(rng: random.Random, max_nodes: int = 14) -> AttackGraph:
    n = rng.randint(0, max_nodes)
    density = rng.uniform(0.05, 0.4)
    nodes = tuple(f"n{k}" for k in range(n))
    edges = {(x, y) for x in nodes for y in nodes if rng.random() < density}
    return AttackGraph(nodes, frozenset(edges))
