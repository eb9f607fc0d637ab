import time

import pytest


# -- acceptance reporting ------------------------------------------------------

_ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Times an acceptance criterion and records its outcome for the summary."""
    marker = request.node.get_closest_marker("criterion")
    label = marker.args[0] if marker else request.node.name
    start = time.perf_counter()
    yield
    _ACCEPTANCE.append((label, request.node.nodeid, time.perf_counter() - start))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.get_closest_marker("criterion"):
        item.config._acceptance_outcomes = getattr(item.config, "_acceptance_outcomes", {})
        item.config._acceptance_outcomes[item.nodeid] = rep.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes = getattr(config, "_acceptance_outcomes", {})
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    times = {nodeid: (label, dt) for label, nodeid, dt in _ACCEPTANCE}
    for nodeid, outcome in outcomes.items():
        label, dt = times.get(nodeid, (nodeid, float("nan")))
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {label}  ({dt:.2f} s)")
