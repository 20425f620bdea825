import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import CORPUS, lit, lits, prog
from weakperm.errors import BudgetExceeded, NoModelsError, UnsatisfiableError
from weakperm.generators import random_deontic_program, random_raw_program
from weakperm.lp import (
    U,
    Interpretation3,
    Truth,
    find_conflicted_literals,
    ic_admissible,
    p_stable_models,
    psi,
    query,
    reduct,
    sceptical_stable,
    stable_models,
    well_founded_model,
)
from weakperm.parser import parse_program
from weakperm.syntax import Program, Rule, augment_deontic, herbrand_base

T_POS = lits("obl(l)", "perm(l)", "perm_w(l)")
T_NEG = lits("obl(-l)", "perm(-l)", "perm_w(-l)")


@pytest.fixture
def deontic(conflicted):
    return augment_deontic(conflicted)


def test_interpretation_rejects_overlap():
    with pytest.raises(ValueError):
        Interpretation3(lits("a"), lits("a"))


def test_reduct_at_empty_interpretation(deontic):
    red = set(reduct(deontic, Interpretation3()))
    for head in ("perm_w(l)", "perm_w(-l)", "obl(l)", "obl(-l)"):
        assert Rule(lit(head), frozenset({U})) in red
    assert Rule(lit("perm(l)"), lits("obl(l)")) in red
    assert Rule(lit("perm(-l)"), lits("obl(-l)")) in red


def test_reduct_turns_false_naf_into_fact(deontic):
    red = set(reduct(deontic, Interpretation3(F=lits("obl(l)"))))
    assert Rule(lit("obl(-l)")) in red


def test_reduct_of_naf_free_program_is_identity():
    p = prog("a.\nb <- a.\n<- b, c.\n")
    assert set(reduct(p, Interpretation3(lits("a"), lits("c")))) == set(p.rules)


def test_psi_examples(deontic):
    assert psi(deontic, Interpretation3()) == Interpretation3()
    i1 = Interpretation3(lits("obl(l)"), lits("obl(-l)"))
    assert psi(deontic, i1) == Interpretation3(T_POS, T_NEG)
    assert psi(prog("a."), Interpretation3(), hb=lits("a")) == Interpretation3(lits("a"), frozenset())


def test_well_founded_examples(deontic):
    assert well_founded_model(deontic) == Interpretation3()
    p = augment_deontic(prog("obl(p)."))
    wfm = well_founded_model(p)
    assert wfm.T == lits("obl(p)", "perm(p)", "perm_w(p)")
    assert wfm.F == herbrand_base(p) - wfm.T
    with pytest.raises(UnsatisfiableError) as info:
        well_founded_model(augment_deontic(prog("obl(p).\nobl(-p).")))
    assert info.value.violated


def test_p_stable_examples(deontic):
    models = p_stable_models(deontic).models
    assert set(models) == {Interpretation3(), Interpretation3(T_POS, T_NEG), Interpretation3(T_NEG, T_POS)}
    assert p_stable_models(Program()).models == (Interpretation3(),)
    assert p_stable_models(prog("a.")).models == (Interpretation3(lits("a"), lits("-a")),)


def test_stable_examples(deontic):
    assert [m.T for m in stable_models(deontic)] == [T_POS, T_NEG]
    assert len(stable_models(augment_deontic(prog("obl(p).\nobl(-p).")))) == 0
    (m,) = stable_models(Program()).models
    assert m.T == frozenset()


def test_sceptical_examples(deontic):
    assert sceptical_stable(deontic) == frozenset()
    assert sceptical_stable(augment_deontic(prog("obl(p)."))) == lits("obl(p)", "perm(p)", "perm_w(p)")
    with pytest.raises(NoModelsError):
        sceptical_stable(augment_deontic(prog("obl(p).\nobl(-p).")))


def test_ic_admissible_examples():
    p = augment_deontic(prog("a."), extra=[lit("p")])
    assert not ic_admissible(p, Interpretation3(lits("obl(p)", "obl(-p)")))
    assert not ic_admissible(p, Interpretation3(lits("obl(p)", "perm(-p)")))
    assert ic_admissible(p, Interpretation3())


def test_query_examples(deontic):
    assert query(deontic, lit("perm_w(l)")) == Truth.UNDEFINED
    assert query(deontic, lit("perm_w(l)"), "sceptical") == Truth.UNDEFINED
    assert query(augment_deontic(prog("obl(p).")), lit("perm(p)")) == Truth.TRUE
    assert query(Program(), lit("obl(p)")) == Truth.FALSE
    assert query(Program(), lit("obl(p)"), augment=True) == Truth.FALSE
    assert query(Program(), lit("perm_w(p)"), augment=True) == Truth.TRUE


def test_conflict_detector(conflicted):
    assert find_conflicted_literals(conflicted) == lits("l")
    assert find_conflicted_literals(Program()) == frozenset()
    sea = parse_program((CORPUS / "seawatch.lp").read_text())
    assert find_conflicted_literals(sea, "exact") == frozenset()
    assert find_conflicted_literals(sea, "generalized") == lits("assistance")


def test_stable_cap_counts_naf_literals(deontic):
    with pytest.raises(BudgetExceeded):
        stable_models(deontic, max_hb=1)
    with pytest.raises(BudgetExceeded):
        p_stable_models(deontic, max_hb=1)


def _programs(seed):
    rng = random.Random(seed)
    return random_raw_program(rng) if rng.random() < 0.5 else random_deontic_program(rng)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_fixpoint_law_and_minimality(seed):
    p = _programs(seed)
    hb = herbrand_base(p)
    ps = p_stable_models(p, max_hb=24).models
    for m in ps:
        assert psi(p, m) == m
        assert ic_admissible(p, m)
    wfm = well_founded_model(p, check_constraints=False)
    assert psi(p, wfm) == wfm
    for m in ps:
        assert wfm.T <= m.T and wfm.F <= m.F
    stable = stable_models(p, max_hb=24).models
    assert set(stable) == {m for m in ps if m.is_total(hb)}


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_solver_is_deterministic(seed):
    p = _programs(seed)
    assert stable_models(p, 24).models == stable_models(p, 24).models
    assert p_stable_models(p, 24).models == p_stable_models(p, 24).models


def test_extra_fact_resolves_a_detected_conflict():
    # the syntactic pair is present, yet obl(p) is a fact, so perm_w(p) follows
    raw = parse_program((CORPUS / "resolved.lp").read_text())
    assert find_conflicted_literals(raw) == lits("p")
    p = augment_deontic(raw)
    assert well_founded_model(p).value(lit("perm_w(p)")) == Truth.TRUE
    assert lit("perm_w(p)") in sceptical_stable(p)
