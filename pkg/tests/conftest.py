import os

import pytest

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(num, description): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and rep.when == "call":
        _CRITERIA[marker.args[0]] = (marker.args[1], rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for num in sorted(_CRITERIA):
        desc, ok = _CRITERIA[num]
        terminalreporter.write_line(
            "  criterion %d: %s - %s" % (num, "PASS" if ok else "FAIL", desc))


def fixture_path(name):
    return os.path.join(FIXTURES, name)


@pytest.fixture
def picard72():
    from weilrep.problem import load_problem
    return load_problem(fixture_path("picard72.json"))


@pytest.fixture
def picard216():
    from weilrep.problem import load_problem
    return load_problem(fixture_path("picard216.json"))


@pytest.fixture
def chain24():
    from weilrep.problem import load_problem
    return load_problem(fixture_path("chain24.json"))
