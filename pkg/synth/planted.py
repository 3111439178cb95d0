"""Planted-partition random graphs with a reproducible coin-flip stream."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from evaluation.base import Partition
from graphs.base import Graph
from graphs.builders import from_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PlantedPartitionSpec:
    """Class sizes with per-class intra-link and a shared inter-link probability.

    A scalar ``p_in`` applies to every class.
    """

    sizes: Sequence[int]
    p_in: float | Sequence[float]
    p_out: float
    seed: int = 0

    def __post_init__(self) -> None:
        sizes = tuple(int(s) for s in self.sizes)
        p_in = self.p_in
        if np.isscalar(p_in):
            p_in = (float(p_in),) * len(sizes)
        p_in = tuple(float(p) for p in p_in)
        p_out = self.p_out

        if len(sizes) < 2:
            raise ValueError(f"A planted partition needs at least 2 classes, got {len(sizes)}")
        if min(sizes) < 1:
            raise ValueError(f"Class sizes must be >= 1, got {sizes}")
        if len(p_in) != len(sizes):
            raise ValueError(f"Got {len(p_in)} intra-link probabilities for {len(sizes)} classes")
        for p in (*p_in, p_out):
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"Link probabilities must lie in [0, 1], got {p!r}")

        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "p_in", p_in)
        object.__setattr__(self, "p_out", float(p_out))
        object.__setattr__(self, "seed", int(self.seed))

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def block_probabilities(self) -> np.ndarray:
        k = len(self.sizes)
        probs = np.full((k, k), self.p_out)
        np.fill_diagonal(probs, self.p_in)
        return probs


def planted_partition(spec: PlantedPartitionSpec) -> tuple[Graph, Partition]:
    """Sample a graph and return it with its ground-truth partition.

    Nodes are numbered class by class. One uniform draw from PCG64(seed) is
    consumed per unordered pair i < j in lexicographic order, and the pair
    becomes a unit edge when the draw falls below its link probability.
    Nodes left without neighbors stay in the graph with degree 0.
    """
    n = spec.n
    labels = np.repeat(np.arange(len(spec.sizes)), spec.sizes)
    rows, cols = np.triu_indices(n, 1)

    rng = np.random.Generator(np.random.PCG64(spec.seed))
    draws = rng.random(rows.size)
    keep = draws < spec.block_probabilities()[labels[rows], labels[cols]]

    upper = sp.coo_matrix((np.ones(int(keep.sum())), (rows[keep], cols[keep])), shape=(n, n))
    graph = from_matrix(upper + upper.T, allow_self_loops=False)
    truth = Partition(assignment=labels, k=len(spec.sizes))

    isolated = graph.isolated_nodes()
    if isolated.size:
        logger.warning("Planted partition (seed %d) has %d isolated nodes", spec.seed, isolated.size)
    logger.info(
        "Generated planted partition: sizes=%s p_in=%s p_out=%g seed=%d -> %d edges",
        spec.sizes, spec.p_in, spec.p_out, spec.seed, graph.edge_count(),
    )
    return graph, truth
