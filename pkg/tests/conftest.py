"""Collects acceptance outcomes and prints one line per criterion at the end of the run."""

_results: dict = {}
_labels: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label, title): an acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark is not None:
            _labels[item.nodeid] = mark.args


def pytest_runtest_logreport(report):
    if report.nodeid not in _labels:
        return
    if report.when == "call" or report.failed:
        prev = _results.get(report.nodeid)
        if prev != "FAIL":
            _results[report.nodeid] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _labels:
        return
    terminalreporter.section("acceptance criteria")
    ordered = sorted(_labels.items(), key=lambda kv: int(kv[1][0][2:]))
    for nodeid, (label, title) in ordered:
        status = _results.get(nodeid, "NOT RUN")
        terminalreporter.write_line(f"{label:<5} {status:<7} {title}")
