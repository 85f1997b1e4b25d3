import pytest

from constlfu import LfuCache

FIG1_ORDER = [b"x", b"y", b"z", b"a", b"b", b"c"]
FIG1_STATE = [(1, [b"x", b"y"]), (2, [b"z", b"a"]), (5, [b"b", b"c"])]
FIG2_STATE = [(1, [b"x", b"y"]), (2, [b"a"]), (3, [b"z"]), (5, [b"b", b"c"])]


def build_fig1(cache_cls=LfuCache, capacity=10):
    """Six keys at counts x,y=1  z,a=2  b,c=5, inserted in order x,y,z,a,b,c."""
    cache = cache_cls(capacity)
    for key in FIG1_ORDER:
        cache.insert(key, key.upper())
    for key, extra in [(b"z", 1), (b"a", 1), (b"b", 4), (b"c", 4)]:
        for _ in range(extra):
            cache.access(key)
    return cache


@pytest.fixture
def fig1():
    return build_fig1()


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
