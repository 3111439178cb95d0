import numpy as np
from scipy.sparse.csgraph import breadth_first_order

from graphs.base import Graph


def connected_components(g: Graph) -> np.ndarray:
    """Label every node with the index of its connected component (BFS from the lowest unseen node)."""
    labels = np.full(g.n, -1, dtype=int)
    component = 0
    for seed in range(g.n):
        if labels[seed] >= 0:
            continue
        reached = breadth_first_order(g.weights, seed, directed=False, return_predecessors=False)
        labels[reached] = component
        component += 1
    return labels


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    reached = breadth_first_order(g.weights, 0, directed=False, return_predecessors=False)
    return reached.size == g.n
