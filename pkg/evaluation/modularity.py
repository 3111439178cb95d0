from __future__ import annotations

import numpy as np
import scipy.sparse as sp

from evaluation.base import Partition
from graphs.base import Graph


def modularity(g: Graph, p: Partition) -> float:
    """Weighted Newman modularity of ``p`` on ``g``.

    Q = sum_c (e_c - a_c^2) with e_c the fraction of total edge weight inside
    class c (ordered pairs, so each internal edge counts twice) and a_c the
    fraction of total degree carried by class c. Reduces to the edge-count
    form for 0/1 weights.
    """
    if p.n != g.n:
        raise ValueError(f"Partition has {p.n} nodes but the graph has {g.n}")
    m2 = g.m2
    if m2 <= 0:
        raise ValueError("Modularity is undefined on a graph with no edges")

    membership = sp.csr_matrix(
        (np.ones(g.n), (np.arange(g.n), p.assignment)), shape=(g.n, p.k)
    )
    # diag(M^T W M) is the internal weight of each class
    internal = (membership.T @ g.weights @ membership).diagonal()
    volume = np.bincount(p.assignment, weights=g.degrees, minlength=p.k)
    return float(internal.sum() / m2 - np.sum((volume / m2) ** 2))
