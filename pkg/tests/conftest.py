import pytest

from fourcycles import build_graph, gen_complete, gen_complete_bipartite, gen_cycle, gen_star


@pytest.fixture
def c4():
    return build_graph([(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def k4():
    return gen_complete(4)


@pytest.fixture
def k23():
    return gen_complete_bipartite(2, 3)


@pytest.fixture
def star5():
    return gen_star(5)


@pytest.fixture
def c5():
    return gen_cycle(5)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split()[1])):
        terminalreporter.write_line(line)
