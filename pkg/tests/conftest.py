import pathlib

import pytest

from weakperm.parser import parse_program, parse_literal
from weakperm.syntax import ARGUMENTATION

CORPUS = pathlib.Path(__file__).resolve().parent.parent / "corpus"

_criteria: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    crit = getattr(report, "criterion", None)
    if crit is not None:
        _criteria.setdefault(crit, []).append((report.nodeid, report.passed))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        rep.criterion = mark.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_criteria):
        results = _criteria[n]
        ok = all(passed for _, passed in results)
        failed = [nid.split("::")[-1] for nid, passed in results if not passed]
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({sum(p for _, p in results)}/{len(results)} checks)"
        if failed:
            line += " failing: " + ", ".join(failed)
        tr.write_line(line)


def lit(text):
    return parse_literal(text)


def lits(*texts):
    return frozenset(parse_literal(t) for t in texts)


def prog(text):
    return parse_program(text)


def theory(text):
    return parse_program(text, ARGUMENTATION)


@pytest.fixture
def conflicted():
    return prog("obl(l) <- not obl(-l).\nobl(-l) <- not obl(l).\n")


@pytest.fixture
def two_obligations():
    return theory("r1: => obl(a).\nr2: => obl(-a).\n")
