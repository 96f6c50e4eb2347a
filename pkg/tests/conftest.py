import itertools

import pytest
from hypothesis import strategies as st

from kedgecon import Multigraph
from kedgecon.multigraph import complete, complete_bipartite, cycle, parallel_k2, path

_ACCEPTANCE_LINES = []


def bipartition_lambda(g, u, v):
    """Min over all vertex sets holding u but not v of crossing edges."""
    others = [x for x in g.vertices if x not in (u, v)]
    best = None
    for r in range(len(others) + 1):
        for extra in itertools.combinations(others, r):
            side = {u, *extra}
            c = sum(1 for _, a, b in g.edges if (a in side) != (b in side))
            best = c if best is None else min(best, c)
    return best


def bipartition_global(g):
    """Global min cut by scanning every proper nonempty vertex subset."""
    best = None
    for mask in range(1, (1 << g.n) - 1):
        c = sum(1 for _, a, b in g.edges if ((mask >> a) ^ (mask >> b)) & 1)
        best = c if best is None else min(best, c)
    return best


@st.composite
def multigraphs(draw, min_n=2, max_n=7, max_m=12, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1]),
            max_size=max_m,
        )
    )
    if connected:
        # spanning path keeps it connected
        pairs = [(i, i + 1) for i in range(n - 1)] + pairs
    return Multigraph(n, pairs)


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def k23():
    # a=0, b=1, w1..w3 = 2..4
    return complete_bipartite(2, 3)


@pytest.fixture
def theta():
    # u=0, v=1 joined by a direct edge and the paths 0-2-1, 0-3-1
    return Multigraph(4, [(0, 1), (0, 2), (2, 1), (0, 3), (3, 1)])


@pytest.fixture
def triangle():
    return cycle(3)


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def k2_triple():
    return parallel_k2(3)


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
