"""Brute-force reference semantics.

Nothing here calls the solvers in :mod:`weakperm.lp` or the extension
search in :mod:`weakperm.argumentation`.  Every interpretation (or every
subset of arguments) is checked against the defining conditions
directly; the checks are vectorised with numpy over chunks of the
enumeration, which is the only concession to speed.

``psi`` is evaluated from its declarative characterisation: the true
part is the least set closed under the reduct's rules, the false part is
the *greatest* set F such that every reduct rule for an atom in F has a
positive body member in F (``u`` is never in F).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .argumentation import COMPLETE, GROUNDED, STABLE, AttackGraph, Extension
from .errors import BudgetExceeded, OracleAnomaly
from .lp import Interpretation3, ModelSet
from .syntax import Program, herbrand_base, sort_literals

_CHUNK = 1 << 16


@dataclass(frozen=True)
class EnumerationBudget:
    max_hb_three: int = 12
    max_hb_two: int = 24
    max_args: int = 20

    def __post_init__(self):
        for name in ("max_hb_three", "max_hb_two", "max_args"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


DEFAULT_BUDGET = EnumerationBudget()


def _digits(codes: np.ndarray, n: int, base: int):
    """Split codes into per-position digits; position 0 is most significant."""
    out = []
    rest = codes.copy()
    for _ in range(n):
        out.append(rest % base)
        rest //= base
    return out[::-1]


def _chunks(total: int):
    for start in range(0, total, _CHUNK):
        yield np.arange(start, min(total, start + _CHUNK), dtype=np.int64)


def _tf_arrays(codes: np.ndarray, n: int, valued: str):
    """Bitmask arrays (T, F): three-valued digit 0/1/2 = undefined/true/false,
    two-valued digit 0/1 = true/false."""
    base = 3 if valued == "three" else 2
    t = np.zeros(len(codes), dtype=np.int64)
    f = np.zeros(len(codes), dtype=np.int64)
    for k, d in enumerate(_digits(codes, n, base)):
        bit = np.int64(1 << k)
        if base == 3:
            t |= np.where(d == 1, bit, 0)
            f |= np.where(d == 2, bit, 0)
        else:
            t |= np.where(d == 0, bit, 0)
            f |= np.where(d == 1, bit, 0)
    return t, f


def _check_hb(n: int, valued: str, budget: EnumerationBudget):
    cap = budget.max_hb_three if valued == "three" else budget.max_hb_two
    if n > cap:
        raise BudgetExceeded(f"{valued}-valued enumeration", n, cap)


def enumerate_interpretations(hb, valued: str = "three", budget: EnumerationBudget = DEFAULT_BUDGET):
    """Yield every interpretation over ``hb`` in canonical order."""
    if valued not in ("two", "three"):
        raise ValueError(f"valued must be 'two' or 'three', not {valued!r}")
    lits = sort_literals(hb)
    n = len(lits)
    _check_hb(n, valued, budget)
    base = 3 if valued == "three" else 2
    for codes in _chunks(base ** n):
        t, f = _tf_arrays(codes, n, valued)
        for tm, fm in zip(t.tolist(), f.tolist()):
            yield Interpretation3(
                frozenset(lits[k] for k in range(n) if tm >> k & 1),
                frozenset(lits[k] for k in range(n) if fm >> k & 1),
            )


class _Encoded:
    def __init__(self, p: Program):
        self.lits = sort_literals(herbrand_base(p))
        self.n = len(self.lits)
        index = {x: k for k, x in enumerate(self.lits)}

        def m(xs):
            return sum(1 << index[x] for x in xs)

        self.rules = [(1 << index[r.head], m(r.pos), m(r.neg)) for r in p.rules if r.head is not None]
        self.constraints = [(m(r.pos), m(r.neg)) for r in p.rules if r.head is None]
        self.full = (1 << self.n) - 1
        self.naf = [k for k in range(self.n) if any(neg >> k & 1 for _, _, neg in self.rules)]

    def psi_arrays(self, t: np.ndarray, f: np.ndarray):
        kept = [(t & neg) == 0 for _, _, neg in self.rules]
        without_u = [k & ((neg & ~f) == 0) for k, (_, _, neg) in zip(kept, self.rules)]

        tp = np.zeros_like(t)
        while True:
            nxt = tp.copy()
            for (head, pos, _), ok in zip(self.rules, without_u):
                nxt |= np.where(ok & ((pos & ~tp) == 0), np.int64(head), 0)
            if np.array_equal(nxt, tp):
                break
            tp = nxt

        fp = np.full_like(t, self.full)
        while True:
            supported = np.zeros_like(t)
            for (head, pos, _), ok in zip(self.rules, kept):
                supported |= np.where(ok & ((pos & fp) == 0), np.int64(head), 0)
            nxt = fp & ~supported
            if np.array_equal(nxt, fp):
                break
            fp = nxt
        return tp, fp

    def fixpoint_mask(self, t: np.ndarray, f: np.ndarray) -> np.ndarray:
        tp, fp = self.psi_arrays(t, f)
        return (tp == t) & (fp == f)

    def admissible_mask(self, t: np.ndarray, f: np.ndarray) -> np.ndarray:
        ok = np.ones(len(t), dtype=bool)
        for pos, neg in self.constraints:
            ok &= ~(((pos & ~t) == 0) & ((neg & ~f) == 0))
        return ok

    def to_interp(self, tm: int, fm: int) -> Interpretation3:
        return Interpretation3(
            frozenset(self.lits[k] for k in range(self.n) if tm >> k & 1),
            frozenset(self.lits[k] for k in range(self.n) if fm >> k & 1),
        )

    def scan(self, valued: str, ic_filter: bool):
        base = 3 if valued == "three" else 2
        out = []
        for codes in _chunks(base ** self.n):
            t, f = _tf_arrays(codes, self.n, valued)
            keep = self.fixpoint_mask(t, f)
            if ic_filter:
                keep &= self.admissible_mask(t, f)
            out.extend(self.to_interp(a, b) for a, b in zip(t[keep].tolist(), f[keep].tolist()))
        return out


def brute_force_p_stable(p: Program, budget: EnumerationBudget = DEFAULT_BUDGET,
                         ic_filter: bool = True) -> ModelSet:
    enc = _Encoded(p)
    _check_hb(enc.n, "three", budget)
    models = sorted(enc.scan("three", ic_filter), key=Interpretation3.sort_key)
    return ModelSet(tuple(models), "p-stable")


def brute_force_stable(p: Program, budget: EnumerationBudget = DEFAULT_BUDGET) -> ModelSet:
    enc = _Encoded(p)
    _check_hb(enc.n, "two", budget)
    models = sorted(enc.scan("two", True), key=Interpretation3.sort_key)
    return ModelSet(tuple(models), "stable")


def brute_force_stable_naf(p: Program, budget: EnumerationBudget = DEFAULT_BUDGET) -> ModelSet:
    """Stable models by guessing only the literals that occur under ``not``.

    For a total interpretation, psi reads nothing but those literals, so
    every stable model is psi of some guess that psi reproduces on the
    guessed literals and leaves nothing undefined.  This keeps programs
    with a large Herbrand base but few naf literals within reach.
    """
    enc = _Encoded(p)
    if enc.n > 62:
        raise BudgetExceeded("bitmask width (Herbrand base)", enc.n, 62)
    k = len(enc.naf)
    if k > budget.max_hb_two:
        raise BudgetExceeded("two-valued enumeration of naf literals", k, budget.max_hb_two)
    naf_mask = sum(1 << b for b in enc.naf)
    models = []
    for codes in _chunks(1 << k):
        small_t, small_f = _tf_arrays(codes, k, "two")
        t = np.zeros_like(codes)
        f = np.zeros_like(codes)
        for j, b in enumerate(enc.naf):
            t |= ((small_t >> j) & 1) << b
            f |= ((small_f >> j) & 1) << b
        tp, fp = enc.psi_arrays(t, f)
        keep = ((tp | fp) == enc.full) & ((tp & naf_mask) == t) & ((fp & naf_mask) == f)
        keep &= enc.admissible_mask(tp, fp)
        models.extend(enc.to_interp(a, b) for a, b in zip(tp[keep].tolist(), fp[keep].tolist()))
    models = sorted(set(models), key=Interpretation3.sort_key)
    return ModelSet(tuple(models), "stable")


def brute_force_well_founded(p: Program, budget: EnumerationBudget = DEFAULT_BUDGET) -> Interpretation3:
    """The P-stable model (constraints ignored) whose true set is contained
    in every other's."""
    models = brute_force_p_stable(p, budget, ic_filter=False).models
    least = [m for m in models if all(m.T <= o.T for o in models)]
    if len(least) != 1:
        raise OracleAnomaly(f"expected one least P-stable model, found {len(least)}")
    return least[0]


def brute_force_extensions(g: AttackGraph, semantics: str,
                           budget: EnumerationBudget = DEFAULT_BUDGET) -> list:
    n = len(g.nodes)
    if n > budget.max_args:
        raise BudgetExceeded("subset enumeration", n, budget.max_args)
    pos = {x: k for k, x in enumerate(g.nodes)}
    att_of = [0] * n
    tgt_of = [0] * n
    for x, y in g.edges:
        att_of[pos[y]] |= 1 << pos[x]
        tgt_of[pos[x]] |= 1 << pos[y]

    found = []
    for s in _chunks(1 << n):
        member = [(s >> k) & 1 == 1 for k in range(n)]
        hit = [(s & att_of[k]) != 0 for k in range(n)]
        cf = np.ones(len(s), dtype=bool)
        for k in range(n):
            cf &= ~(member[k] & ((s & tgt_of[k]) != 0))
        if semantics == STABLE:
            ok = cf.copy()
            for k in range(n):
                ok &= member[k] | hit[k]
        else:
            ok = cf.copy()
            for k in range(n):
                acceptable = np.ones(len(s), dtype=bool)
                for j in range(n):
                    if att_of[k] >> j & 1:
                        acceptable &= hit[j]
                ok &= member[k] == acceptable
        found.extend(int(v) for v in s[ok])

    sets = [frozenset(g.nodes[k] for k in range(n) if v >> k & 1) for v in found]
    if semantics == GROUNDED:
        least = [m for m in sets if all(m <= o for o in sets)]
        if len(least) != 1:
            raise OracleAnomaly(f"expected one minimal complete extension, found {len(least)}")
        return [Extension(least[0], GROUNDED)]
    if semantics not in (COMPLETE, STABLE):
        raise ValueError(f"unknown semantics {semantics!r}")
    sets.sort(key=lambda m: (len(m), sorted(pos[x] for x in m)))
    return [Extension(m, semantics) for m in sets]
