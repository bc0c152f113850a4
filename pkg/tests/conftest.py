import pytest

_results: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or report.when != "call" and not report.failed:
        return
    number, title = marker.args
    entry = _results.setdefault(number, {"title": title, "passed": True, "detail": ""})
    if report.failed:
        entry["passed"] = False
        entry["detail"] = report.longrepr.reprcrash.message if hasattr(report.longrepr, "reprcrash") else str(report.longrepr)
    for key, value in item.user_properties:
        if key == "summary" and entry["passed"]:
            entry["detail"] = value


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        entry = _results[number]
        status = "PASS" if entry["passed"] else "FAIL"
        line = f"[{status}] criterion {number:2d}: {entry['title']}"
        if entry["detail"]:
            line += f" ({entry['detail'].splitlines()[0]})"
        terminalreporter.write_line(line)
