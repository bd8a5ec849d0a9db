"""
Shared fixtures. Puts app/ on sys.path the way run_app.py does.
"""

import random
import sys
from pathlib import Path

import networkx as nx
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "app"))

from core.graph import Graph, build_graph  # noqa: E402


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edge_list())
    return h


@pytest.fixture
def triangle() -> Graph:
    return complete_graph(3)


@pytest.fixture
def path3() -> Graph:
    return path_graph(3)


@pytest.fixture
def path5() -> Graph:
    return path_graph(5)


@pytest.fixture
def random_corpus():
    """Small random graphs of mixed density, deterministic per run."""
    corpus = []
    for seed in range(40):
        rng = random.Random(seed)
        n = rng.randint(1, 10)
        corpus.append(random_graph(n, rng.choice([0.1, 0.3, 0.5, 0.8]), seed))
    return corpus
