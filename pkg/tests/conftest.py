import random

import pytest
from hypothesis import strategies as st

from liarsdom.corpus import INSTANCES
from liarsdom.generate import random_graph
from liarsdom.graphs import SimpleGraph
from liarsdom.reduction import reduce

ACCEPTANCE_LINES: list[str] = []


@st.composite
def graphs(draw, max_n=9, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return SimpleGraph(n, chosen)


@st.composite
def graph_and_subset(draw, max_n=9):
    g = draw(graphs(max_n=max_n))
    d = draw(st.sets(st.integers(0, g.vertex_count - 1))) if g.vertex_count else set()
    return g, d


@pytest.fixture(scope="session")
def reduced():
    """Instances A, B, C as (graph, embedding, instance, map)."""
    out = {}
    for name, make in INSTANCES.items():
        g, emb = make()
        inst, rmap = reduce(g, emb)
        out[name] = (g, emb, inst, rmap)
    return out


def random_graphs(count, max_n, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        out.append(random_graph(n, rng.choice([0.2, 0.35, 0.5, 0.7]), rng))
    return out


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
