import random
import sys
from itertools import combinations

import pytest
from hypothesis import settings, strategies as st

from chromhom.chain import ChainComplex
from chromhom.graphs import Graph, star
from chromhom.linalg import RankBackend
from chromhom.partitions import partitions_of

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def partitions(max_n=8, min_n=0):
    return st.integers(min_n, max_n).flatmap(lambda n: st.sampled_from(partitions_of(n)))


@st.composite
def graphs(draw, min_n=2, max_n=5, max_m=None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    if not pairs:
        return Graph(n)
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_m or len(pairs)))
    return Graph.from_edges(n, chosen)


def random_graphs(count, max_n=5, seed=2024):
    """Reproducible random graphs with 2..max_n vertices and at least one edge."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_n)
        edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < 0.5]
        if edges:
            out.append(Graph.from_edges(n, edges))
    return out


@pytest.fixture(scope="session")
def star_complexes():
    """Exact-mode complexes of stars on 2..5 vertices, shared across tests."""
    return {n: ChainComplex(star(n), backend=RankBackend("exact")) for n in range(2, 6)}


@pytest.fixture(scope="session")
def star6_modular():
    """The n=6 star through the class-sum projectors with modular ranks."""
    return ChainComplex(star(6), backend=RankBackend("modular", seed=0), method="projector")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(results.items()):
            terminalreporter.write_line(line)
