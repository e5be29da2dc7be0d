import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_outcomes: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion n")


_RANK = {"PASS": 0, "SKIP": 1, "FAIL": 2}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    rep = (yield).get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.failed:
        status = "FAIL"
    elif rep.skipped:
        status = "SKIP"
    elif rep.when == "call":
        status = "PASS"
    else:
        return
    n, title = mark.args
    prev = _outcomes.get(n, (title, "PASS"))[1]
    _outcomes[n] = (title, max(prev, status, key=_RANK.get))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_outcomes):
        title, status = _outcomes[n]
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {title}")
