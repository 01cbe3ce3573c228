from __future__ import annotations

import pytest

# outcome per acceptance criterion, filled in as the tests run
_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config) -> None:
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        _CRITERIA[number] = ("PASS" if report.passed else "FAIL", title)


def pytest_terminal_summary(terminalreporter) -> None:
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        verdict, title = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {verdict}  {title}")
