import sys
from pathlib import Path

import pytest

from matroidx import BasePair, GraphicMatroid, LinearGF2Matroid, UniformMatroid

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).parent / "fixtures"

K4_EDGES = [(0, 1), (1, 2), (2, 3), (0, 2), (1, 3), (0, 3)]  # e1=12 e2=23 e3=34 e4=13 e5=24 e6=14


def ids(m, *labels):
    return m.ids(str(x) for x in labels)


def eid(m, label):
    return m.element(str(label))


@pytest.fixture
def k4():
    return GraphicMatroid(4, K4_EDGES, [f"e{i}" for i in range(1, 7)])


@pytest.fixture
def k4_pair(k4):
    return BasePair.from_labels(k4, ["e1", "e2", "e3"], ["e4", "e5", "e6"])


@pytest.fixture
def u24():
    return UniformMatroid(2, 4)


@pytest.fixture
def u24_pair(u24):
    return BasePair.from_labels(u24, "12", "34")


@pytest.fixture
def i3i3():
    return LinearGF2Matroid.from_rows([[1, 0, 0, 1, 0, 0], [0, 1, 0, 0, 1, 0], [0, 0, 1, 0, 0, 1]])


@pytest.fixture
def i3i3_pair(i3i3):
    return BasePair.from_labels(i3i3, "123", "456")


@pytest.fixture
def rank4():
    # [I4 | c5=(1100) c6=(0110) c7=(0011) c8=(1000)]
    return LinearGF2Matroid.from_rows([
        [1, 0, 0, 0, 1, 0, 0, 1],
        [0, 1, 0, 0, 1, 1, 0, 0],
        [0, 0, 1, 0, 0, 1, 1, 0],
        [0, 0, 0, 1, 0, 0, 1, 0],
    ])


@pytest.fixture
def rank4_pair(rank4):
    return BasePair.from_labels(rank4, "1234", "5678")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")
    config._criteria = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        item.config._criteria.append((mark.args[0], mark.args[1], report.passed))


def pytest_terminal_summary(terminalreporter, config):
    rows = sorted(getattr(config, "_criteria", []))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, passed in rows:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} criterion {number}: {text}")
