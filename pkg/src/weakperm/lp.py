"""Three-valued semantics for (deontic) logic programs.

The central operator ``psi`` maps an interpretation to the least
three-valued model of the program's reduct.  Its fixpoints are the
partial stable models; the one with least truth is the well-founded
model and the total ones are the stable models.

Integrity constraints take no part in ``psi``.  They filter models
afterwards (:func:`ic_admissible`), and the well-founded computation
raises :class:`UnsatisfiableError` when its own true set violates one.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .errors import BudgetExceeded, NoModelsError, NonConvergence, UnsatisfiableError
from .syntax import (
    OBL,
    DeonticLiteral,
    Literal,
    Program,
    Rule,
    augment_deontic,
    base_literal,
    herbrand_base,
    literal_key,
    obl,
    sort_literals,
)

DEFAULT_MAX_HB_STABLE = 24
DEFAULT_MAX_HB_PARTIAL = 12


class _UMarker:
    """The constant ``u``: undefined in every interpretation, never a head."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "u"

    __str__ = __repr__


U = _UMarker()


class Truth(str, enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNDEFINED = "undefined"


@dataclass(frozen=True)
class Interpretation3:
    T: frozenset = frozenset()
    F: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "T", frozenset(self.T))
        object.__setattr__(self, "F", frozenset(self.F))
        if self.T & self.F:
            raise ValueError(f"true and false sets overlap on {sort_literals(self.T & self.F)}")

    def value(self, x) -> Truth:
        if x in self.T:
            return Truth.TRUE
        if x in self.F:
            return Truth.FALSE
        return Truth.UNDEFINED

    def undefined(self, hb: Iterable) -> frozenset:
        return frozenset(hb) - self.T - self.F

    def is_total(self, hb: Iterable) -> bool:
        return not self.undefined(hb)

    def sort_key(self) -> tuple:
        return (
            tuple(literal_key(x) for x in sort_literals(self.T)),
            tuple(literal_key(x) for x in sort_literals(self.F)),
        )

    def __str__(self):
        t = ", ".join(map(str, sort_literals(self.T)))
        f = ", ".join(map(str, sort_literals(self.F)))
        return f"<{{{t}}}, {{{f}}}>"


@dataclass(frozen=True)
class ReducedProgram:
    rules: tuple

    def __iter__(self):
        return iter(self.rules)


@dataclass(frozen=True)
class ModelSet:
    models: tuple
    semantics: str

    def __iter__(self):
        return iter(self.models)

    def __len__(self):
        return len(self.models)


# --- reference (literal-level) reduct and psi -------------------------------


def reduct(p: Program, i: Interpretation3) -> ReducedProgram:
    out = []
    for r in p.rules:
        if r.neg & i.T:
            continue
        remaining = r.neg - i.F
        pos = set(r.pos)
        if remaining:
            pos.add(U)
        out.append(Rule(r.head, frozenset(pos), label=r.label))
    return ReducedProgram(tuple(out))


def _least_model(rules) -> set:
    model = set()
    changed = True
    while changed:
        changed = False
        for head, body in rules:
            if head not in model and body <= model:
                model.add(head)
                changed = True
    return model


def psi(p: Program, i: Interpretation3, hb: Optional[Iterable] = None) -> Interpretation3:
    hb = frozenset(herbrand_base(p) if hb is None else hb)
    red = [r for r in reduct(p, i) if r.head is not None]
    true = _least_model([(r.head, r.pos) for r in red])
    possibly = _least_model([(r.head, r.pos - {U}) for r in red])
    return Interpretation3(frozenset(true) & hb, hb - possibly)


# --- compiled solver ----------------------------------------------------------


class _Compiled:
    """Program over bit positions of its canonically ordered Herbrand base."""

    def __init__(self, p: Program, hb: frozenset):
        extra = set()
        for r in p.rules:
            extra |= r.literals()
        self.hb = sort_literals(hb)
        self.n_hb = len(self.hb)
        # Body literals outside hb (only possible with a caller-supplied hb)
        # get positions too; they are never derivable and never reported.
        self.atoms = self.hb + sort_literals(extra - hb)
        self.index = {x: k for k, x in enumerate(self.atoms)}
        self.hb_mask = (1 << self.n_hb) - 1
        self.rules = []
        self.constraints = []
        naf = 0
        for r in p.rules:
            pos = self.mask(r.pos)
            neg = self.mask(r.neg)
            naf |= neg
            if r.head is None:
                self.constraints.append((pos, neg))
            else:
                self.rules.append((1 << self.index[r.head], pos, neg))
        self.naf_mask = naf

    def mask(self, xs) -> int:
        m = 0
        for x in xs:
            m |= 1 << self.index[x]
        return m

    def unmask(self, m: int) -> frozenset:
        out = []
        k = 0
        while m:
            if m & 1:
                out.append(self.atoms[k])
            m >>= 1
            k += 1
        return frozenset(out)

    @staticmethod
    def _lm(rules) -> int:
        model = 0
        changed = True
        while changed:
            changed = False
            for head, pos in rules:
                if not model & head and not pos & ~model:
                    model |= head
                    changed = True
        return model

    def psi(self, t: int, f: int):
        """Return (true, possibly_true) bitmasks of the reduct's least model."""
        sure, maybe = [], []
        for head, pos, neg in self.rules:
            if neg & t:
                continue
            maybe.append((head, pos))
            if not neg & ~f:
                sure.append((head, pos))
        return self._lm(sure), self._lm(maybe)

    def step(self, t: int, f: int):
        true, possibly = self.psi(t, f)
        return true, self.hb_mask & ~possibly

    def violated(self, t: int, f: int) -> list:
        return [k for k, (pos, neg) in enumerate(self.constraints) if not pos & ~t and not neg & ~f]

    def interp(self, t: int, f: int) -> Interpretation3:
        return Interpretation3(self.unmask(t & self.hb_mask), self.unmask(f & self.hb_mask))


@lru_cache(maxsize=256)
def _compile(p: Program, hb: frozenset) -> _Compiled:
    return _Compiled(p, hb)


def _compiled(p: Program, hb=None) -> _Compiled:
    return _compile(p, frozenset(herbrand_base(p) if hb is None else hb))


def _check_cap(size: int, cap: int, what: str):
    if size > cap:
        raise BudgetExceeded(what, size, cap)


def ic_admissible(p: Program, i: Interpretation3) -> bool:
    """No integrity constraint has its whole body true in ``i``."""
    for r in p.constraints():
        if r.pos <= i.T and r.neg <= i.F:
            return False
    return True


def violated_constraints(p: Program, i: Interpretation3) -> list:
    return [r for r in p.constraints() if r.pos <= i.T and r.neg <= i.F]


def _wfm_masks(c: _Compiled):
    t = f = 0
    for _ in range(c.n_hb * c.n_hb + 2):
        nt, nf = c.step(t, f)
        if (nt, nf) == (t, f):
            return t, f
        t, f = nt, nf
    raise NonConvergence(f"psi iteration did not converge within {c.n_hb ** 2 + 1} rounds")


def well_founded_model(p: Program, check_constraints: bool = True, hb=None) -> Interpretation3:
    """Least fixpoint of ``psi`` reached by iteration from <{}, {}>."""
    c = _compiled(p, hb)
    t, f = _wfm_masks(c)
    model = c.interp(t, f)
    if check_constraints:
        bad = violated_constraints(p, model)
        if bad:
            raise UnsatisfiableError(
                "well-founded model violates " + "; ".join(str(r) for r in bad), model, bad
            )
    return model


def _stable_masks(c: _Compiled):
    n = c.naf_mask
    found = []

    def search(t: int, f: int):
        while True:
            true, possibly = c.psi(t, f)
            if t & ~possibly or f & true:
                return
            nt = t | (true & n)
            nf = f | (n & ~possibly)
            if nt & nf:
                return
            if (nt, nf) == (t, f):
                break
            t, f = nt, nf
        open_ = n & ~(t | f)
        if not open_:
            found.append(true)
            return
        bit = open_ & -open_
        search(t | bit, f)
        search(t, f | bit)

    search(0, 0)
    return found


def stable_models(p: Program, max_hb: int = DEFAULT_MAX_HB_STABLE, hb=None) -> ModelSet:
    """Total partial-stable models that satisfy every integrity constraint.

    The search branches only on literals that occur under ``not``; ``max_hb``
    caps the number of those.
    """
    c = _compiled(p, hb)
    _check_cap(bin(c.naf_mask).count("1"), max_hb, "stable model search (naf literals)")
    models = []
    for t in _stable_masks(c):
        f = c.hb_mask & ~t
        if not c.violated(t, f):
            models.append(c.interp(t, f))
    models.sort(key=Interpretation3.sort_key)
    return ModelSet(tuple(models), "stable")


def p_stable_models(p: Program, max_hb: int = DEFAULT_MAX_HB_PARTIAL, hb=None) -> ModelSet:
    """All admissible fixpoints of ``psi``.

    A fixpoint is fixed by its values on the atoms that occur under ``not``
    and always extends the well-founded model, so only the naf atoms left
    undefined by the well-founded model are enumerated.
    """
    c = _compiled(p, hb)
    wt, wf = _wfm_masks(c)
    n = c.naf_mask
    open_bits = [1 << k for k in range(len(c.atoms)) if n & ~(wt | wf) & (1 << k)]
    _check_cap(len(open_bits), max_hb, "partial stable model search (open naf literals)")
    seen = set()
    models = []
    for choice in itertools.product((0, 1, 2), repeat=len(open_bits)):
        t, f = wt, wf
        for bit, v in zip(open_bits, choice):
            if v == 1:
                t |= bit
            elif v == 2:
                f |= bit
        nt, nf = c.step(t, f)
        if (nt & n, nf & n) != (t & n, f & n) or (nt, nf) in seen:
            continue
        seen.add((nt, nf))
        if not c.violated(nt, nf):
            models.append(c.interp(nt, nf))
    models.sort(key=Interpretation3.sort_key)
    return ModelSet(tuple(models), "p-stable")


def sceptical_stable(p: Program, max_hb: int = DEFAULT_MAX_HB_STABLE, hb=None) -> frozenset:
    models = stable_models(p, max_hb, hb).models
    if not models:
        raise NoModelsError("program has no stable models")
    return frozenset.intersection(*(m.T for m in models))


def query(p: Program, q, semantics: str = "wfs", max_hb: int = DEFAULT_MAX_HB_STABLE,
          augment: bool = False) -> Truth:
    """Truth status of ``q``.

    With ``augment`` the deontic axioms are added over the program's
    literals and the literal of ``q``.  A literal outside the Herbrand base
    is false: no rule can derive it.
    """
    if augment:
        p = augment_deontic(p, extra=[base_literal(q)])
    if q not in herbrand_base(p):
        return Truth.FALSE
    if semantics == "wfs":
        return well_founded_model(p).value(q)
    if semantics in ("sceptical", "sceptical-stable", "stable"):
        models = stable_models(p, max_hb).models
        if not models:
            raise NoModelsError("program has no stable models")
        if all(q in m.T for m in models):
            return Truth.TRUE
        if all(q in m.F for m in models):
            return Truth.FALSE
        return Truth.UNDEFINED
    raise ValueError(f"unknown semantics {semantics!r}")


def find_conflicted_literals(p: Program, detector: str = "exact") -> frozenset:
    """Atoms ``l`` with the mutual rule pair obl(l) <- not obl(-l) and
    obl(-l) <- not obl(l).

    ``exact`` requires those bodies verbatim.  ``generalized`` also accepts
    extra positive body members that are facts of ``p``.  Each conflict is
    reported once, by its positive literal.
    """
    if detector not in ("exact", "generalized"):
        raise ValueError(f"unknown detector {detector!r}")
    allowed = p.facts() if detector == "generalized" else set()
    heads = set()
    for r in p.rules:
        h = r.head
        if not (isinstance(h, DeonticLiteral) and h.op == OBL):
            continue
        if r.neg == {obl(h.inner.complement())} and r.pos <= allowed:
            heads.add(h.inner)
    return frozenset(l.positive for l in heads if l.complement() in heads)


def conflicted_pair(atom: str) -> Program:
    """The two-rule program that makes ``atom`` a conflicted literal."""
    l = Literal(atom)
    return Program((
        Rule(obl(l), neg={obl(l.complement())}),
        Rule(obl(l.complement()), neg={obl(l)}),
    ))
