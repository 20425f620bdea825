"""Command line front end.

Exit status: 0 success, 1 parse or usage error, 2 unsatisfiable program /
no stable models / no stable extensions, 3 enumeration budget exceeded,
4 solver and oracle disagree, 5 weak-permission check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import argumentation as af
from . import lp, oracle
from .errors import (
    BudgetExceeded,
    NoExtensionsError,
    NoModelsError,
    ParseError,
    UnsatisfiableError,
)
from .parser import detect_kind, parse_program
from .syntax import (
    ARGUMENTATION,
    LP,
    augment_deontic,
    herbrand_base,
    perm_w,
    sort_literals,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNSAT = 2
EXIT_BUDGET = 3
EXIT_ORACLE = 4
EXIT_CHECK = 5

COMMANDS = ("solve", "argue", "check-wp", "conflicts", "oracle-diff")
SOLVE_SEMANTICS = ("wfs", "stable", "sceptical")
ARGUE_SEMANTICS = (af.GROUNDED, af.COMPLETE, af.STABLE)


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    input_path: str
    semantics: Optional[str] = None
    format: str = "text"
    budget: oracle.EnumerationBudget = field(default_factory=oracle.EnumerationBudget)
    max_hb: Optional[int] = None
    augment: bool = True
    detector: str = "exact"
    use_oracle: bool = False
    kind: str = "auto"
    reading: str = af.SUBARGUMENT
    check_set: Optional[list] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        allowed = {"solve": SOLVE_SEMANTICS, "argue": ARGUE_SEMANTICS}.get(self.command)
        if allowed is None:
            return
        if self.semantics is None:
            self.semantics = allowed[0]
        if self.semantics not in allowed:
            raise UsageError(f"semantics {self.semantics!r} is not valid for {self.command}; "
                             f"choose from {', '.join(allowed)}")


def _strs(xs) -> list:
    return [str(x) for x in sort_literals(xs)]


def _model_dict(m: lp.Interpretation3, hb) -> dict:
    return {"true": _strs(m.T), "false": _strs(m.F), "undefined": _strs(m.undefined(hb))}


def _arg_dict(a: af.Argument) -> dict:
    return {"id": a.id, "conclusion": str(a.conclusion), "premises": [p.id for p in a.premises]}


def _load(cfg: RunConfig, text: str):
    kind = detect_kind(text) if cfg.kind == "auto" else cfg.kind
    return kind, parse_program(text, kind, source=cfg.input_path)


def _lp_program(cfg: RunConfig, raw):
    return augment_deontic(raw) if cfg.augment else raw


def _cap(cfg: RunConfig, valued: str) -> int:
    if cfg.max_hb is not None:
        return cfg.max_hb
    return cfg.budget.max_hb_two if valued == "two" else cfg.budget.max_hb_three


def _budget(cfg: RunConfig) -> oracle.EnumerationBudget:
    if cfg.max_hb is None:
        return cfg.budget
    return oracle.EnumerationBudget(cfg.max_hb, cfg.max_hb, cfg.budget.max_args)


# --- commands -----------------------------------------------------------------


def _solve(cfg: RunConfig, raw) -> tuple:
    p = _lp_program(cfg, raw)
    hb = herbrand_base(p)
    report = {"command": "solve", "semantics": cfg.semantics, "satisfiable": True, "models": []}
    if cfg.semantics == "wfs":
        if cfg.use_oracle:
            model = oracle.brute_force_well_founded(p, _budget(cfg))
            bad = lp.violated_constraints(p, model)
        else:
            try:
                model = lp.well_founded_model(p)
                bad = []
            except UnsatisfiableError as e:
                model, bad = e.model, e.violated
        report["models"] = [_model_dict(model, hb)]
        if bad:
            report["satisfiable"] = False
            report["violated"] = [str(r) for r in bad]
            return report, EXIT_UNSAT
        return report, EXIT_OK

    if cfg.use_oracle:
        models = oracle.brute_force_stable(p, _budget(cfg)).models
    else:
        models = lp.stable_models(p, _cap(cfg, "two")).models
    report["model_count"] = len(models)
    if not models:
        report["satisfiable"] = False
        return report, EXIT_UNSAT
    if cfg.semantics == "stable":
        report["models"] = [_model_dict(m, hb) for m in models]
    else:
        common_t = frozenset.intersection(*(m.T for m in models))
        common_f = frozenset.intersection(*(m.F for m in models))
        report["models"] = [_model_dict(lp.Interpretation3(common_t, common_f), hb)]
    return report, EXIT_OK


def _theory_graph(cfg: RunConfig, theory):
    args = af.build_arguments(theory)
    return args, af.build_attack_graph(args, cfg.reading)


def _extensions(cfg: RunConfig, g, semantics: str) -> list:
    if cfg.use_oracle:
        return oracle.brute_force_extensions(g, semantics, cfg.budget)
    return af.extensions(g, semantics, cfg.budget.max_args)


def _argue(cfg: RunConfig, theory) -> tuple:
    args, g = _theory_graph(cfg, theory)
    by_id = af.arguments_by_id(args)
    report = {
        "command": "argue",
        "semantics": cfg.semantics,
        "reading": cfg.reading,
        "arguments": [_arg_dict(a) for a in args],
        "attacks": sorted(([x.id, y.id] for x, y in g.edges), key=lambda e: (g.position[by_id[e[0]]], g.position[by_id[e[1]]])),
    }
    exts = _extensions(cfg, g, cfg.semantics)
    report["satisfiable"] = bool(exts)
    report["extensions"] = [{"arguments": [_arg_dict(a) for a in e.ordered(g)]} for e in exts]
    status = EXIT_OK
    if exts:
        report["justified"] = _strs(af.justified_conclusions_of(exts))
    else:
        report["justified"] = None
        status = EXIT_UNSAT
    if cfg.check_set is not None:
        unknown = [k for k in cfg.check_set if k not in by_id]
        if unknown:
            raise UsageError(f"unknown argument ids: {', '.join(unknown)}")
        s = {by_id[k] for k in cfg.check_set}
        report["checked_set"] = {
            "arguments": list(cfg.check_set),
            "conflict_free": g.conflict_free(s),
            "admissible": g.is_admissible(s),
            "complete": g.is_complete(s),
            "stable": g.is_stable(s),
            "internal_attacks": sorted([x.id, y.id] for x, y in g.edges if x in s and y in s),
        }
    return report, status


def _status_word(truth) -> str:
    return truth.value if hasattr(truth, "value") else str(truth)


def _check_wp(cfg: RunConfig, kind: str, parsed) -> tuple:
    checks = []
    if kind == LP:
        conflicted = lp.find_conflicted_literals(parsed, cfg.detector)
        p = _lp_program(cfg, parsed)
        satisfiable = True
        try:
            wfm = lp.well_founded_model(p)
        except UnsatisfiableError as e:
            wfm, satisfiable = e.model, False
        models = lp.stable_models(p, _cap(cfg, "two")).models if conflicted else ()
        for l in sort_literals(conflicted):
            for q in (perm_w(l), perm_w(l.complement())):
                checks.append({"literal": str(l), "semantics": "wfs", "query": str(q),
                               "status": _status_word(wfm.value(q)) + ("" if satisfiable else " (unsatisfiable)"),
                               "ok": q not in wfm.T})
                if not models:
                    status, ok = "no-models", True
                elif all(q in m.T for m in models):
                    status, ok = "true", False
                elif all(q in m.F for m in models):
                    status, ok = "false", True
                else:
                    status, ok = "undefined", True
                checks.append({"literal": str(l), "semantics": "sceptical", "query": str(q),
                               "status": status, "ok": ok})
    else:
        args, g = _theory_graph(cfg, parsed)
        conflicted = af.conflictual_literals(parsed, args)
        per_sem = {}
        if conflicted:
            per_sem[af.GROUNDED] = [af.grounded_extension(g)]
            per_sem[af.STABLE] = _extensions(cfg, g, af.STABLE)
        for l in sort_literals(conflicted):
            for q in (perm_w(l), perm_w(l.complement())):
                for sem, exts in per_sem.items():
                    if not exts:
                        status, ok = "no-extensions", True
                    else:
                        justified = q in af.justified_conclusions_of(exts)
                        status, ok = ("justified" if justified else "not justified"), not justified
                    checks.append({"literal": str(l), "semantics": sem, "query": str(q),
                                   "status": status, "ok": ok})
    verdict = "PASS" if all(c["ok"] for c in checks) else "FAIL"
    report = {"command": "check-wp", "kind": kind, "conflicted": _strs(conflicted),
              "checks": checks, "verdict": verdict}
    return report, EXIT_OK if verdict == "PASS" else EXIT_CHECK


def _conflicts(cfg: RunConfig, kind: str, parsed) -> tuple:
    if kind == LP:
        found = lp.find_conflicted_literals(parsed, cfg.detector)
    else:
        found = af.conflictual_literals(parsed)
    return {"command": "conflicts", "kind": kind, "detector": cfg.detector if kind == LP else None,
            "conflicted": _strs(found)}, EXIT_OK


def _oracle_diff(cfg: RunConfig, kind: str, parsed) -> tuple:
    budget = _budget(cfg)
    checks = []
    if kind == LP:
        p = _lp_program(cfg, parsed)
        hb = herbrand_base(p)
        pairs = [
            ("wfs", [lp.well_founded_model(p, check_constraints=False)], [oracle.brute_force_well_founded(p, budget)]),
            ("stable", list(lp.stable_models(p, _cap(cfg, "two"))), list(oracle.brute_force_stable(p, budget))),
            ("p-stable", list(lp.p_stable_models(p, _cap(cfg, "three"))), list(oracle.brute_force_p_stable(p, budget))),
        ]
        for name, mine, ref in pairs:
            checks.append({"name": name, "agree": mine == ref,
                           "solver": [_model_dict(m, hb) for m in mine],
                           "oracle": [_model_dict(m, hb) for m in ref]})
    else:
        _, g = _theory_graph(cfg, parsed)
        for sem in ARGUE_SEMANTICS:
            mine = af.extensions(g, sem, budget.max_args)
            ref = oracle.brute_force_extensions(g, sem, budget)
            checks.append({"name": sem, "agree": [e.members for e in mine] == [e.members for e in ref],
                           "solver": [[a.id for a in e.ordered(g)] for e in mine],
                           "oracle": [[a.id for a in e.ordered(g)] for e in ref]})
    agree = all(c["agree"] for c in checks)
    return {"command": "oracle-diff", "kind": kind, "agree": agree, "checks": checks}, \
        EXIT_OK if agree else EXIT_ORACLE


def run(cfg: RunConfig, text: str) -> tuple:
    """Execute one command on file contents; return ``(report, exit_status)``."""
    kind, parsed = _load(cfg, text)
    if cfg.command == "solve":
        if kind != LP:
            raise UsageError("solve needs a logic program; use argue for argumentation theories")
        return _solve(cfg, parsed)
    if cfg.command == "argue":
        if kind != ARGUMENTATION:
            raise UsageError("argue needs an argumentation theory; use solve for logic programs")
        return _argue(cfg, parsed)
    if cfg.command == "check-wp":
        return _check_wp(cfg, kind, parsed)
    if cfg.command == "conflicts":
        return _conflicts(cfg, kind, parsed)
    return _oracle_diff(cfg, kind, parsed)


# --- rendering ------------------------------------------------------------------


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def _braces(xs) -> str:
    return "{" + ", ".join(xs) + "}"


def to_text(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    cmd = report["command"]
    if cmd == "solve":
        lines.append(f"semantics: {report['semantics']}")
        lines.append(f"satisfiable: {'yes' if report['satisfiable'] else 'no'}")
        if "model_count" in report:
            lines.append(f"stable models: {report['model_count']}")
        for k, m in enumerate(report["models"], 1):
            lines.append(f"model {k}:")
            for part in ("true", "false", "undefined"):
                lines.append(f"  {part}: {_braces(m[part])}")
        for v in report.get("violated", ()):
            lines.append(f"violated: {v}")
    elif cmd == "argue":
        lines.append(f"semantics: {report['semantics']} ({report['reading']} attacks)")
        lines.append("arguments:")
        for a in report["arguments"]:
            body = ", ".join(a["premises"])
            lines.append(f"  {a['id']}: {body + ' => ' if a['premises'] else ''}{a['conclusion']}")
        lines.append("attacks: " + ", ".join(f"{x} > {y}" for x, y in report["attacks"]))
        lines.append(f"extensions: {len(report['extensions'])}")
        for k, e in enumerate(report["extensions"], 1):
            lines.append(f"  extension {k}: " + _braces(a["id"] for a in e["arguments"])
                         + "  conclusions " + _braces(a["conclusion"] for a in e["arguments"]))
        j = report["justified"]
        lines.append("justified: " + ("none (no extensions)" if j is None else _braces(j)))
        cs = report.get("checked_set")
        if cs:
            lines.append(f"checked set {_braces(cs['arguments'])}: "
                         + ", ".join(f"{k.replace('_', '-')}={'yes' if cs[k] else 'no'}"
                                     for k in ("conflict_free", "admissible", "complete", "stable")))
            for x, y in cs["internal_attacks"]:
                lines.append(f"  internal attack: {x} > {y}")
    elif cmd == "check-wp":
        lines.append(f"conflicted: {_braces(report['conflicted'])}")
        for c in report["checks"]:
            mark = "ok" if c["ok"] else "VIOLATION"
            lines.append(f"  {c['semantics']:>9}  {c['query']:<20} {c['status']:<16} {mark}")
        lines.append(f"verdict: {report['verdict']}")
    elif cmd == "conflicts":
        lines.append(f"conflicted: {_braces(report['conflicted'])}")
    else:
        for c in report["checks"]:
            lines.append(f"  {c['name']:<9} {'agree' if c['agree'] else 'MISMATCH'}")
            if not c["agree"]:
                lines.append(f"    solver: {c['solver']}")
                lines.append(f"    oracle: {c['oracle']}")
        lines.append(f"agree: {'yes' if report['agree'] else 'no'}")
    return "\n".join(lines) + "\n"


# --- entry point ----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="weakperm", description="Deontic logic programs and argumentation with weak permission.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "solve": "models of a logic program (wfs, stable, sceptical)",
        "argue": "arguments, attacks and extensions of a theory",
        "check-wp": "status of perm_w for every conflicted literal",
        "conflicts": "list conflicted / conflictual literals",
        "oracle-diff": "compare solver output with brute-force enumeration",
    }
    for name in COMMANDS:
        sp = sub.add_parser(name, help=helps[name])
        sp.add_argument("input", help="input file (UTF-8)")
        sp.add_argument("--semantics", default=None)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--max-hb", type=int, default=None,
                        help="search cap: naf literals for the solver, Herbrand base size with --oracle "
                             "(default 24 two-valued, 12 three-valued)")
        sp.add_argument("--max-args", type=int, default=20, help="cap on undecided arguments for extension search, on all arguments with --oracle")
        sp.add_argument("--no-augment", action="store_true", help="do not add the deontic axioms")
        sp.add_argument("--detector", choices=("exact", "generalized"), default="exact")
        sp.add_argument("--oracle", action="store_true", help="use brute-force enumeration instead of the solver")
        sp.add_argument("--kind", choices=("auto", LP, ARGUMENTATION), default="auto")
        sp.add_argument("--attacks", choices=(af.SUBARGUMENT, af.CONCLUSION), default=af.SUBARGUMENT,
                        help="attack on every sub-argument (default) or on the conclusion only")
        if name == "argue":
            sp.add_argument("--check-set", default=None,
                            help="comma-separated argument ids to test against each semantics")
    return parser


def main(argv=None) -> int:
    try:
        ns = build_parser().parse_args(argv)
        if ns.max_hb is not None and ns.max_hb <= 0 or ns.max_args <= 0:
            raise UsageError("caps must be positive")
        cfg = RunConfig(
            command=ns.command,
            input_path=ns.input,
            semantics=ns.semantics,
            format=ns.format,
            budget=oracle.EnumerationBudget(max_args=ns.max_args),
            max_hb=ns.max_hb,
            augment=not ns.no_augment,
            detector=ns.detector,
            use_oracle=ns.oracle,
            kind=ns.kind,
            reading=ns.attacks,
            check_set=[s.strip() for s in ns.check_set.split(",")] if getattr(ns, "check_set", None) else None,
        )
        try:
            with open(cfg.input_path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise UsageError(f"{cfg.input_path}: {e.strerror}")
        report, status = run(cfg, text)
    except (UsageError, ParseError) as e:
        print(f"weakperm: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"weakperm: budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (NoModelsError, NoExtensionsError) as e:
        print(f"weakperm: {e}", file=sys.stderr)
        return EXIT_UNSAT
    sys.stdout.write(to_json(report) if cfg.format == "json" else to_text(report))
    if status == EXIT_UNSAT:
        print("weakperm: no models / extensions (unsatisfiable)", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
