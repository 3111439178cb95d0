import networkx as nx
import numpy as np
import pytest

from experiments.fixtures import load_les_miserables
from graphs.base import Graph
from graphs.builders import from_edge_list, from_matrix, from_networkx


def random_connected_graph(rng: np.random.Generator, n: int, density: float = 0.3) -> Graph:
    """Random weighted graph, made connected by a random spanning path."""
    w = np.triu(rng.random((n, n)) < density, 1) * rng.uniform(0.1, 2.0, size=(n, n))
    order = rng.permutation(n)
    for a, b in zip(order[:-1], order[1:]):
        i, j = min(a, b), max(a, b)
        if w[i, j] == 0:
            w[i, j] = rng.uniform(0.1, 2.0)
    return from_matrix(w + w.T)


@pytest.fixture
def single_edge() -> Graph:
    return from_edge_list([("a", "b", 1.0)])


@pytest.fixture
def path3() -> Graph:
    return from_edge_list([("0", "1"), ("1", "2")])


@pytest.fixture
def two_triangles() -> Graph:
    return from_edge_list([
        ("a", "b"), ("b", "c"), ("a", "c"),
        ("x", "y"), ("y", "z"), ("x", "z"),
    ])


@pytest.fixture
def karate() -> Graph:
    return from_networkx(nx.karate_club_graph(), weight="unweighted")


@pytest.fixture
def random_graphs():
    """Factory yielding ``count`` random connected graphs with 5 <= n <= max_n."""

    def make(count: int, max_n: int = 50, seed: int = 0) -> list[Graph]:
        rng = np.random.default_rng(seed)
        return [random_connected_graph(rng, int(rng.integers(5, max_n + 1))) for _ in range(count)]

    return make


@pytest.fixture(scope="session")
def lesmis():
    return load_les_miserables()


@pytest.fixture(scope="session")
def lesmis_weighted():
    return load_les_miserables(weighted=True)
