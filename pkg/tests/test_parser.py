import pytest
from hypothesis import given, settings, strategies as st

from conftest import lit, lits
from weakperm.errors import ParseError
from weakperm.generators import random_raw_program, random_conflictual_theory
from weakperm.parser import detect_kind, parse_literal, parse_program
from weakperm.syntax import ARGUMENTATION, LP, Rule

import random


def test_naf_rule():
    p = parse_program("obl(p) <- not obl(-p).")
    (r,) = p.rules
    assert r.head == lit("obl(p)")
    assert r.pos == frozenset() and r.neg == lits("obl(-p)")


def test_constraint_and_fact():
    p = parse_program("% comment\nobl(p).\n<- obl(p), perm(-p).\n")
    assert p.facts() == lits("obl(p)")
    (c,) = p.constraints()
    assert c.pos == lits("obl(p)", "perm(-p)")


def test_conjunctive_head_expands():
    t = parse_program("r3: perm(-assistance) => obl(alertAuthorities) & obl(keepClear).", ARGUMENTATION)
    assert {r.head for r in t.rules} == lits("obl(alertAuthorities)", "obl(keepClear)")
    assert all(r.pos == lits("perm(-assistance)") for r in t.rules)
    assert all(r.label == "r3" for r in t.rules)


def test_facts_declaration():
    t = parse_program("facts: a, -b.\nr1: a => obl(c).\n", ARGUMENTATION)
    assert t.facts == lits("a", "-b")
    assert [r.label for r in t.rules] == ["r1"]


@pytest.mark.parametrize("text,kind,needle", [
    ("perm_w(p) <- q.", LP, "weak permission"),
    ("r: q => perm_w(p).", ARGUMENTATION, "weak permission"),
    ("obl(perm(p)).", LP, "nested"),
    ("Distress.", LP, "lowercase"),
    ("r: not q => obl(p).", ARGUMENTATION, "negation as failure"),
    ("r1: a => b.", LP, "argumentation syntax"),
    ("a <- b.", ARGUMENTATION, "'<-'"),
    ("facts: a.\nfacts: b.", ARGUMENTATION, "duplicate"),
    ("a <- b", LP, "expected"),
    ("a <- $.", LP, "unexpected character"),
])
def test_errors_carry_position(text, kind, needle):
    with pytest.raises(ParseError) as info:
        parse_program(text, kind, source="f.lp")
    e = info.value
    assert needle in e.message
    assert e.line >= 1 and e.column >= 1
    assert str(e).startswith("f.lp:")


def test_error_line_and_column():
    with pytest.raises(ParseError) as info:
        parse_program("a.\nb <- c,\n  perm_w(x) <- d.\n")
    # the second statement is "b <- c, perm_w(x)" followed by a stray "<-"
    assert info.value.line == 3


def test_detect_kind():
    assert detect_kind("a <- not b.") == LP
    assert detect_kind("r1: => obl(a).") == ARGUMENTATION
    assert detect_kind("facts: a.") == ARGUMENTATION


def test_parse_literal():
    assert str(parse_literal("perm_w(-a)")) == "perm_w(-a)"
    with pytest.raises(ParseError):
        parse_literal("a b")


def _roundtrip_lp(p):
    # perm_w heads never reach the printer through the parser
    text = str(p)
    again = parse_program(text)
    assert again == p
    assert str(again) == text


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_lp_print_parse_roundtrip(seed):
    p = random_raw_program(random.Random(seed))
    _roundtrip_lp(p)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_theory_print_parse_roundtrip(seed):
    t = random_conflictual_theory(random.Random(seed))
    text = str(t)
    again = parse_program(text, ARGUMENTATION)
    assert again.facts == t.facts and set(again.rules) == set(t.rules)
    assert str(again) == text
