import pytest

_results: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _results[report.nodeid] = ("PASS" if report.passed else "FAIL", report.nodeid.split("[")[-1].rstrip("]"))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    from test_acceptance import CRITERIA

    titles = {f"criterion_{num:02d}": title for num, title, _ in CRITERIA}
    terminalreporter.section("acceptance criteria")
    for status, ident in sorted(_results.values(), key=lambda r: r[1]):
        terminalreporter.write_line(f"{ident} {status}  {titles.get(ident, '')}")
