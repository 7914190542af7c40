import pytest

from hlnet import topology


@pytest.fixture(scope="session")
def q3():
    return topology.hypercube(3)


@pytest.fixture(scope="session")
def q4():
    return topology.hypercube(4)


@pytest.fixture(scope="session")
def q5():
    return topology.hypercube(5)


def vs(G, *labels):
    return G.vertex_set(G.index_of(s) for s in labels)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
        terminalreporter.write_line(line)
