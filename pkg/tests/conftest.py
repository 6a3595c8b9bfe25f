import random

import pytest

from intervalcanon import oracle
from intervalcanon.graph_core import Graph


def intervals_graph(intervals):
    n = len(intervals)
    return Graph.from_edges(
        n,
        [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if max(intervals[u][0], intervals[v][0]) <= min(intervals[u][1], intervals[v][1])
        ],
    )


# a, b, c, d, e
FIVE_VERTEX = [(1, 1), (1, 2), (1, 3), (2, 3), (3, 3)]
# p1, p2, p4, l, r  -- cliques M, C, D, X sit at points 1..4
FOUR_CLIQUE = [(1, 1), (2, 2), (4, 4), (1, 3), (3, 4)]
# p1, L, R, s2, s23, s34, s4, p5 -- the last four are the boxed module
MODULE = [(1, 1), (1, 4), (2, 5), (2, 2), (2, 3), (3, 4), (4, 4), (5, 5)]


@pytest.fixture
def five_vertex():
    return intervals_graph(FIVE_VERTEX)


@pytest.fixture
def four_clique():
    return intervals_graph(FOUR_CLIQUE)


@pytest.fixture
def module_graph():
    return intervals_graph(MODULE)


@pytest.fixture(scope="session")
def all_graphs_upto6():
    return {n: list(oracle.enumerate_graphs(n)) for n in range(1, 7)}


@pytest.fixture(scope="session")
def interval_graphs_upto6(all_graphs_upto6):
    return {n: [g for g in gs if oracle.brute_is_interval(g)[0]] for n, gs in all_graphs_upto6.items()}


@pytest.fixture
def rng():
    return random.Random(12345)


def complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


# acceptance reporting ---------------------------------------------------------

_criteria: dict[int, tuple[str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    detail = "; ".join(str(v) for k, v in item.user_properties if k == "detail")
    _criteria[number] = ("PASS" if report.passed else "FAIL", title, detail)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        status, title, detail = _criteria[number]
        line = f"[{status}] {number:2d}. {title}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)
