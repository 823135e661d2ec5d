"""Collects acceptance-criterion outcomes and prints one line per criterion."""

import pytest

_results: dict[str, list[tuple[str, str]]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        outcome.get_result().acceptance_label = marker.args[0]


def pytest_runtest_logreport(report):
    label = getattr(report, "acceptance_label", None)
    if label is None:
        return
    if report.when == "call" or report.outcome != "passed":
        name = report.nodeid.split("::")[-1]
        _results.setdefault(label, []).append((name, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcomes in _results.items():
        failed = [name for name, o in outcomes if o != "passed"]
        verdict = "FAIL" if failed else "PASS"
        detail = f"  (failing: {', '.join(failed)})" if failed else ""
        terminalreporter.write_line(f"{verdict}  {label}{detail}")
