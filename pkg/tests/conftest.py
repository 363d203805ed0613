import pytest

_results = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        crit = dict(report.user_properties).get("criterion")
        if crit is not None:
            _results.append((crit, report.outcome))


@pytest.fixture(autouse=True)
def _tag_criterion(request, record_property):
    marker = request.node.get_closest_marker("criterion")
    if marker is not None:
        number, title = marker.args
        record_property("criterion", f"{number:>2}. {title}")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    # a criterion passes only if every test carrying it passed
    verdict = {}
    for crit, outcome in _results:
        verdict[crit] = verdict.get(crit, True) and outcome == "passed"
    for crit in sorted(verdict):
        status = "PASS" if verdict[crit] else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {crit}")
