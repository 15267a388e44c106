import pytest

from aesmix.mixcolumns import Arch, get_backend


@pytest.fixture(params=list(Arch), ids=lambda a: a.value)
def backend(request):
    return get_backend(request.param)


@pytest.fixture
def backends():
    return [get_backend(a) for a in Arch]


_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    n, title = marker.args
    ok = call.excinfo is None
    prev = _criteria.get(n)
    status = "PASS" if ok and (prev is None or prev[1] == "PASS") else "FAIL"
    _criteria[n] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, status = _criteria[n]
        terminalreporter.write_line(f"[{status}] criterion {n:>2}: {title}")
