"""Collects acceptance outcomes per criterion and prints one line for each."""

import pytest

_OUTCOMES: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or rep.failed:
        number, title = marker.args
        entry = _OUTCOMES.setdefault(number, {"title": title, "passed": True, "tests": 0, "detail": []})
        entry["tests"] += 1
        if rep.failed:
            entry["passed"] = False
            entry["detail"].append(item.name)
        for name, value in item.user_properties:
            if name == "summary":
                entry["detail"].append(value)


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_OUTCOMES):
        e = _OUTCOMES[number]
        status = "PASS" if e["passed"] else "FAIL"
        line = f"criterion {number}: {status}  {e['title']}"
        if e["detail"]:
            line += "  [" + "; ".join(e["detail"]) + "]"
        terminalreporter.write_line(line)
