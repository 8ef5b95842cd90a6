"""Collects acceptance outcomes and prints one PASS/FAIL line per criterion."""

import pytest

_results = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or not (rep.when == "call" or rep.failed):
        return
    num, title = mark.args
    entry = _results.setdefault(num, [title, 0, 0])
    entry[1 if rep.passed else 2] += 1


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_results):
        title, passed, failed = _results[num]
        status = "PASS" if passed and not failed else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d}  {status}  {title}  ({passed} passed, {failed} failed)")
