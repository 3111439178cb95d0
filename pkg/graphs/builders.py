"""Build similarity graphs from edge lists, matrices, networkx graphs and feature vectors."""

from __future__ import annotations

import logging
from collections.abc import Hashable, Iterable, Sequence

import numpy as np
import scipy.sparse as sp
from scipy.spatial.distance import cdist

from graphs.base import FeatureSet, Graph

logger = logging.getLogger(__name__)

# Relative asymmetry tolerated by from_matrix before the input is rejected
SYMMETRY_TOLERANCE = 1e-12


def from_matrix(
    matrix,
    node_ids: Sequence[str] | None = None,
    allow_self_loops: bool = True,
) -> Graph:
    """Wrap a symmetric nonnegative dense or sparse matrix as a Graph.

    Zero entries are dropped. Asymmetry up to SYMMETRY_TOLERANCE (relative to
    the largest weight) is averaged away so the stored matrix is exactly
    symmetric; anything larger is rejected.
    """
    w = sp.csr_matrix(matrix, dtype=float, copy=True)
    if w.shape[0] != w.shape[1]:
        raise ValueError(f"Similarity matrix must be square, got shape {w.shape}")
    w.sum_duplicates()
    w.eliminate_zeros()

    if w.nnz:
        if not np.all(np.isfinite(w.data)):
            raise ValueError("Similarity matrix contains non-finite weights")
        if w.data.min() < 0:
            raise ValueError(f"Similarity weights must be nonnegative, found {w.data.min()!r}")
        gap = abs(w - w.T)
        scale = float(w.data.max())
        if gap.nnz and gap.max() > SYMMETRY_TOLERANCE * scale:
            raise ValueError(f"Similarity matrix is not symmetric (max |w_ij - w_ji| = {gap.max():.3g})")
        w = ((w + w.T) * 0.5).tocsr()
        w.eliminate_zeros()

    if not allow_self_loops and np.count_nonzero(w.diagonal()):
        raise ValueError("Self-loops are not allowed")

    n = w.shape[0]
    if node_ids is None:
        node_ids = [str(i) for i in range(n)]
    node_ids = tuple(str(name) for name in node_ids)
    if len(node_ids) != n:
        raise ValueError(f"Got {len(node_ids)} node ids for {n} nodes")
    if len(set(node_ids)) != n:
        raise ValueError("Node ids must be unique")

    w.sort_indices()
    degrees = np.asarray(w.sum(axis=1)).ravel()
    return Graph(weights=w, degrees=degrees, node_ids=node_ids)


def from_edge_list(
    entries: Iterable[tuple],
    allow_self_loops: bool = False,
    nodes: Iterable[Hashable] | None = None,
) -> Graph:
    """Build a Graph from (u, v) or (u, v, w) entries.

    Node ids are renumbered densely in first-appearance order (ids listed in
    ``nodes`` come first, which is how isolated nodes are declared). Missing
    weights default to 1.0; (u, v) and (v, u) are the same edge and repeated
    pairs have their weights summed.
    """
    index: dict[str, int] = {}

    def _id(node) -> int:
        key = str(node)
        if key not in index:
            index[key] = len(index)
        return index[key]

    for node in nodes or ():
        _id(node)

    rows: list[int] = []
    cols: list[int] = []
    vals: list[float] = []
    for entry in entries:
        if len(entry) == 2:
            u, v = entry
            w = 1.0
        elif len(entry) == 3:
            u, v, w = entry
            w = 1.0 if w is None else float(w)
        else:
            raise ValueError(f"Edge entries must be (u, v) or (u, v, w), got {entry!r}")
        if not w > 0 or not np.isfinite(w):
            raise ValueError(f"Edge ({u}, {v}) has non-positive weight {w!r}")
        i, j = _id(u), _id(v)
        if i == j:
            if not allow_self_loops:
                raise ValueError(f"Self-loop on node {u!r} is not allowed")
            rows.append(i)
            cols.append(i)
            vals.append(w)
        else:
            rows += [i, j]
            cols += [j, i]
            vals += [w, w]

    n = len(index)
    w = sp.coo_matrix((vals, (rows, cols)), shape=(n, n), dtype=float).tocsr()
    return from_matrix(w, node_ids=list(index), allow_self_loops=allow_self_loops)


def from_networkx(g, weight: str = "weight") -> Graph:
    """Convert a networkx graph, keeping its node order; edges without ``weight`` get 1.0."""
    if g.is_directed():
        raise ValueError("Directed graphs are not supported; convert with g.to_undirected() first")
    entries = [(u, v, data.get(weight, 1.0)) for u, v, data in g.edges(data=True)]
    return from_edge_list(entries, allow_self_loops=True, nodes=list(g.nodes))


def rbf_similarity(features: FeatureSet, gamma: float) -> Graph:
    """Complete graph with w_ij = exp(-||x_i - x_j||^2 / gamma), no self-loops."""
    if not gamma > 0:
        raise ValueError(f"gamma must be positive, got {gamma!r}")
    if features.n < 2:
        raise ValueError("RBF similarity needs at least two instances")

    w = np.exp(-cdist(features.values, features.values, "sqeuclidean") / gamma)
    w = np.triu(w, 1)
    w = w + w.T
    logger.debug("RBF similarity: n=%d gamma=%g", features.n, gamma)
    return from_matrix(w, allow_self_loops=False)


def knn_matrix(features: FeatureSet, k: int) -> np.ndarray:
    """Directed 0/1 kNN matrix: row i marks the k nearest other instances of i.

    Euclidean distance; ties are broken toward the lower node index.
    """
    n = features.n
    if not 1 <= k < n:
        raise ValueError(f"k must satisfy 1 <= k < n={n}, got {k}")
    dist = cdist(features.values, features.values, "euclidean")
    np.fill_diagonal(dist, np.inf)
    nearest = np.argsort(dist, axis=1, kind="stable")[:, :k]
    a = np.zeros((n, n))
    a[np.repeat(np.arange(n), k), nearest.ravel()] = 1.0
    return a


def knn_similarity(features: FeatureSet, k: int) -> Graph:
    """Symmetrized kNN graph W' = (A + A^T) / 2, weights in {0.5, 1.0}."""
    a = knn_matrix(features, k)
    logger.debug("kNN similarity: n=%d k=%d", features.n, k)
    return from_matrix((a + a.T) / 2.0, allow_self_loops=False)
