import itertools

import pytest
from hypothesis import strategies as st

from signedhoffman.graph import build, is_connected

# lines printed by the acceptance suite at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])


@st.composite
def signed_graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    signs = draw(st.lists(st.sampled_from((0, 1, -1)), min_size=len(pairs), max_size=len(pairs)))
    edges = [(u, v, s) for (u, v), s in zip(pairs, signs) if s]
    if connected:
        # a random spanning path keeps the graph connected
        perm = draw(st.permutations(range(n)))
        have = {(min(u, v), max(u, v)) for u, v, _ in edges}
        for a, b in zip(perm, perm[1:]):
            key = (min(a, b), max(a, b))
            if key not in have:
                edges.append((key[0], key[1], draw(st.sampled_from((1, -1)))))
                have.add(key)
    G = build(n, edges)
    assert not connected or is_connected(G)
    return G


@pytest.fixture(scope="session")
def census6():
    from signedhoffman.search import classify_all
    return classify_all(6)
