import sys
import os

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_RESULTS = {}


@pytest.fixture
def criterion(request):
    """Record a timing and verdict for an acceptance criterion."""
    record = {"label": request.node.get_closest_marker("criterion").args[0],
              "limit": request.node.get_closest_marker("criterion").args[1],
              "elapsed": None}
    _RESULTS[request.node.nodeid] = record
    return record


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, limit): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    rec = _RESULTS.get(item.nodeid)
    if rec is not None and (rep.when == "call" or rep.failed):
        rec.setdefault("passed", True)
        rec["passed"] = rec["passed"] and rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for nodeid, rec in sorted(_RESULTS.items(), key=lambda kv: kv[1]["label"]):
        verdict = "PASS" if rec.get("passed") else "FAIL"
        took = f"{rec['elapsed']:.2f}s" if rec["elapsed"] is not None else "n/a"
        tr.write_line(f"{verdict}  {rec['label']}  ({took}, limit {rec['limit']}s)")
