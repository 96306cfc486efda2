from __future__ import annotations

import pytest

_outcomes: dict[str, tuple[int, str, str]] = {}
_titles: dict[str, tuple[int, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _titles[item.nodeid] = mark.args


@pytest.hookimpl(trylast=True)
def pytest_runtest_logreport(report):
    if report.nodeid not in _titles:
        return
    number, title = _titles[report.nodeid]
    if report.when == "call" or (report.when == "setup" and not report.passed):
        outcome = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
        _outcomes[report.nodeid] = (number, title, outcome)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(_outcomes.values()):
        terminalreporter.write_line(f"{outcome} criterion {number}: {title}")
