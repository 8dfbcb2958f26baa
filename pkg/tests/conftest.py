"""One PASS/FAIL line per acceptance criterion at the end of the run."""

import pytest

_results: dict[int, tuple[str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (report.when != "call" and report.passed):
        return
    number, title = mark.args
    detail = ""
    if report.failed:
        detail = str(call.excinfo.value).splitlines()[0] if call.excinfo else "error"
    prev = _results.get(number)
    if prev is None or prev[0] == "PASS":
        _results[number] = ("PASS" if report.passed else "FAIL", title, detail)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_results):
        status, title, detail = _results[number]
        line = f"{status}  {number}. {title}"
        tr.write_line(line + (f"  [{detail}]" if detail else ""))
    passed = sum(r[0] == "PASS" for r in _results.values())
    tr.write_line(f"{passed}/{len(_results)} criteria pass")
