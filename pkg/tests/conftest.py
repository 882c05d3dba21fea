import sys
from pathlib import Path

import pytest

from gkmcohom.gkmgraph import GkmGraph

sys.path.insert(0, str(Path(__file__).parent))


def s6_graph(p, q):
    """Two fixed points joined by edges p^2 x1, p^2 x2, pq x3."""
    return GkmGraph.build(3, ["N", "S"], [("N", "S", [p * p, 0, 0]), ("N", "S", [0, p * p, 0]), ("N", "S", [0, 0, p * q])])


@pytest.fixture
def s6():
    return s6_graph(2, 3)


_criteria: dict[str, tuple[str, bool, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(cid, title): acceptance criterion checked by this test")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.failed or report.skipped):
        return
    marks = dict(report.user_properties).get("criterion")
    if not marks:
        return
    cid, title = marks
    _, ok, secs = _criteria.get(cid, (title, True, 0.0))
    _criteria[cid] = (title, ok and report.passed, secs + report.duration)


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_setup(item):
    mark = item.get_closest_marker("criterion")
    if mark:
        item.user_properties.append(("criterion", mark.args))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_criteria):
        title, ok, secs = _criteria[cid]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {cid} {title} ({secs:.2f}s)")
