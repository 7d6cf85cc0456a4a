import pytest

_results = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    label = item.get_closest_marker("criterion")
    if label is None or report.when != "call" and not report.failed:
        return
    number, title = label.args
    detail = dict(item.user_properties).get("detail", "")
    if report.when == "call" or number not in _results:
        _results[number] = (title, "PASS" if report.passed else "FAIL", detail)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        title, status, detail = _results[number]
        line = f"[{status}] criterion {number:>2}: {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
