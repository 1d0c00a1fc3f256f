import pytest

_results = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when not in ("setup", "call"):
        return
    num, title = marker.args
    failed = rep.failed or _results.get(num, (title, "PASS"))[1] == "FAIL"
    if rep.failed or rep.when == "call":
        _results[num] = (title, "FAIL" if failed else "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_results):
        title, verdict = _results[num]
        terminalreporter.write_line(f"[{verdict}] criterion {num}: {title}")
