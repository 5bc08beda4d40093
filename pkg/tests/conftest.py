import os
import sys
from collections import defaultdict

from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

CRITERIA = {
    "1": "parameter table for n = 3..6",
    "2": "valency theorem on all graphs with <= 6 vertices",
    "3": "TST corollary on the same sweep",
    "4": "zero-pattern theorem on the same sweep",
    "5": "path 1-2-3 TST space spanned by E13 - E31",
    "6": "f_3 diagonal classification",
    "7": "lambda_system(K_n) = 0 for n = 4, 5",
    "8": "f_3 Jordan families: residuals <=> full axiom check",
    "9": "Heisenberg fixture with constant 1/4 is a bialgebra",
    "10": "construction data pass => bialgebra",
    "11": "property suites",
    "8b": "supplement: f_3 residuals <=> co-Jacobi, and <=> full check on the cocycle locus",
    "9b": "supplement: Heisenberg fixture verdicts match the sympy oracle; constant 1/2 works",
}


def _order(cid):
    digits = "".join(ch for ch in cid if ch.isdigit())
    return int(digits), cid

_outcomes = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id): acceptance criterion covered by the test")


def pytest_collection_modifyitems(items):
    for item in items:
        for mark in item.iter_markers("criterion"):
            item.user_properties.append(("criterion", str(mark.args[0])))


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for key, value in report.user_properties:
        if key == "criterion":
            _outcomes[value].append((report.nodeid, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_outcomes, key=_order):
        results = _outcomes[cid]
        ok = all(outcome == "passed" for _, outcome in results)
        failed = [nid.split("::")[-1] for nid, outcome in results if outcome != "passed"]
        line = f"criterion {cid:>2}: {'PASS' if ok else 'FAIL'}  {CRITERIA.get(cid, '')}"
        if failed:
            line += f"  (failing: {', '.join(failed)})"
        terminalreporter.write_line(line)
