"""Monte-Carlo estimate of expected visits before restart.

Walks are simulated in fixed-size blocks; block b draws from
``numpy.random.default_rng([seed, b])`` (PCG64), so the estimate depends only
on the seed and the block size, never on how many workers run the blocks.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from config import settings
from graphs.base import Graph
from walks.diagnostics import check_alpha

logger = logging.getLogger(__name__)


class _Stepper:
    """Vectorized neighbor sampling with probability w_ij / d_i."""

    def __init__(self, g: Graph):
        w = g.weights
        self.indptr = w.indptr
        self.indices = w.indices
        self.degrees = g.degrees
        self.cum = np.concatenate([[0.0], np.cumsum(w.data)])
        self.row_base = self.cum[w.indptr[:-1]]

    def step(self, pos: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        target = self.row_base[pos] + rng.random(pos.size) * self.degrees[pos]
        k = np.searchsorted(self.cum, target, side="right") - 1
        k = np.clip(k, self.indptr[pos], self.indptr[pos + 1] - 1)
        return self.indices[k]


def _run_block(stepper: _Stepper, n: int, start: int, alpha: float, walks: int, seed: int, block: int) -> np.ndarray:
    rng = np.random.default_rng([seed, block])
    counts = np.zeros(n, dtype=np.int64)
    pos = np.full(walks, start, dtype=np.int64)
    # The start node counts as the first visit
    counts += np.bincount(pos, minlength=n)
    while pos.size:
        pos = pos[rng.random(pos.size) < alpha]
        if not pos.size:
            break
        pos = stepper.step(pos, rng)
        counts += np.bincount(pos, minlength=n)
    return counts


def monte_carlo_visits(
    g: Graph,
    start: int,
    alpha: float,
    walks: int,
    seed: int,
    block_size: int | None = None,
    max_workers: int | None = None,
) -> np.ndarray:
    """Empirical mean visit counts per node over ``walks`` walks from ``start``.

    Each step the walk stops with probability 1 - alpha, otherwise it moves to
    a neighbor j of the current node i with probability w_ij / d_i.
    """
    check_alpha(alpha)
    if not 0 <= start < g.n:
        raise ValueError(f"Start node {start} out of range for n={g.n}")
    if walks < 1:
        raise ValueError(f"walks must be >= 1, got {walks}")
    g.require_positive_degrees("random walk")
    block_size = block_size or settings.mc_block_size
    max_workers = max_workers or settings.max_workers

    stepper = _Stepper(g)
    sizes = [min(block_size, walks - lo) for lo in range(0, walks, block_size)]

    def run(block: int) -> np.ndarray:
        return _run_block(stepper, g.n, start, alpha, sizes[block], seed, block)

    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        blocks = list(pool.map(run, range(len(sizes))))

    total = np.sum(blocks, axis=0)
    logger.debug(
        "Monte-Carlo visits from node %d: %d walks in %d blocks, mean length %.3f",
        start, walks, len(sizes), total.sum() / walks,
    )
    return total / walks
