"""Random walk on the similarity graph: transitions, stationary law, expected visits before restart."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from config import settings
from graphs.base import Graph
from graphs.traversal import is_connected

logger = logging.getLogger(__name__)


@dataclass
class WalkDiagnostics:
    stationary: np.ndarray
    alpha: float
    visits: np.ndarray | None = None


def check_alpha(alpha: float) -> None:
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha!r}")


def transition_matrix(g: Graph) -> sp.csr_matrix:
    """Row-stochastic P = D^{-1} W."""
    g.require_positive_degrees("random walk")
    return (sp.diags(1.0 / g.degrees) @ g.weights).tocsr()


def stationary_distribution(g: Graph) -> np.ndarray:
    """pi_i = d_i / sum_j d_j, the invariant law of the time-reversible walk."""
    g.require_positive_degrees("stationary distribution")
    if not is_connected(g):
        raise ValueError("Stationary distribution is not unique: the graph is disconnected")
    return g.degrees / g.degrees.sum()


def expected_visits(g: Graph, alpha: float, dense_cap: int | None = None) -> np.ndarray:
    """(I - alpha D^{-1} W)^{-1}: entry (i, j) is the expected number of visits
    to j from i before the walk restarts (probability 1 - alpha per step)."""
    check_alpha(alpha)
    dense_cap = settings.dense_cap if dense_cap is None else dense_cap
    if g.n > dense_cap:
        raise ValueError(
            f"expected_visits is dense and capped at n={dense_cap} (got n={g.n}); "
            f"estimate single rows with monte_carlo_visits instead"
        )
    p = transition_matrix(g).toarray()
    return np.linalg.solve(np.eye(g.n) - alpha * p, np.eye(g.n))


def diagnose(g: Graph, alpha: float, with_visits: bool = False) -> WalkDiagnostics:
    check_alpha(alpha)
    pi = stationary_distribution(g)
    visits = expected_visits(g, alpha) if with_visits else None
    logger.info("Walk diagnostics: n=%d alpha=%g max pi=%.4f", g.n, alpha, pi.max())
    return WalkDiagnostics(stationary=pi, alpha=alpha, visits=visits)
