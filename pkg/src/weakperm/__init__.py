"""Weak permission in deontic logic programs and structured argumentation."""

from .argumentation import (
    Argument,
    AttackGraph,
    Extension,
    attacks,
    build_arguments,
    build_attack_graph,
    complete_extensions,
    conflictual_literals,
    grounded_extension,
    justified_conclusions,
    stable_extensions,
)
from .errors import (
    BudgetExceeded,
    NoExtensionsError,
    NoModelsError,
    ParseError,
    UnsatisfiableError,
)
from .lp import (
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
from .parser import parse_literal, parse_program
from .syntax import (
    DeonticLiteral,
    DeonticTheory,
    Literal,
    Program,
    Rule,
    augment_deontic,
    complement,
    herbrand_base,
    occurring_literals,
)

__version__ = "0.1.0"
