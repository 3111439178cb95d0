"""The generalized objective Q(F) and its gradient.

    Q(F) = sum_ij w_ij ||d_i^{sigma-1} F_i - d_j^{sigma-1} F_j||^2
           + mu sum_i d_i^{2 sigma - 1} ||F_i - Y_i||^2

The double sum runs over ordered pairs; we iterate each unordered edge once
and double it.
"""

import numpy as np
import scipy.sparse as sp

from graphs.base import Graph


def _check(g: Graph, f, y, mu: float) -> tuple[np.ndarray, np.ndarray]:
    f = np.asarray(f, dtype=float)
    y = np.asarray(y, dtype=float)
    if f.ndim == 1:
        f = f[:, np.newaxis]
    if y.ndim == 1:
        y = y[:, np.newaxis]
    if f.shape != y.shape or f.shape[0] != g.n:
        raise ValueError(f"F {f.shape} and Y {y.shape} must both be ({g.n}, K)")
    if not mu > 0:
        raise ValueError(f"mu must be positive, got {mu!r}")
    g.require_positive_degrees("objective")
    return f, y


def smoothness(g: Graph, f: np.ndarray, sigma: float) -> float:
    scale = g.degrees ** (sigma - 1.0)
    upper = sp.triu(g.weights, k=1).tocoo()
    diff = scale[upper.row, None] * f[upper.row] - scale[upper.col, None] * f[upper.col]
    return 2.0 * float(np.sum(upper.data * np.sum(diff**2, axis=1)))


def fitting(g: Graph, f: np.ndarray, y: np.ndarray, sigma: float) -> float:
    return float(np.sum(g.degrees ** (2.0 * sigma - 1.0) * np.sum((f - y) ** 2, axis=1)))


def objective(g: Graph, f, y, sigma: float, mu: float) -> float:
    f, y = _check(g, f, y, mu)
    return smoothness(g, f, sigma) + mu * fitting(g, f, y, sigma)


def objective_gradient(g: Graph, f, y, sigma: float, mu: float) -> np.ndarray:
    """4 D^{sigma-1} L D^{sigma-1} F + 2 mu D^{2 sigma - 1} (F - Y), with L = D - W."""
    f, y = _check(g, f, y, mu)
    scale = (g.degrees ** (sigma - 1.0))[:, np.newaxis]
    laplacian = sp.diags(g.degrees) - g.weights
    smooth = 4.0 * scale * (laplacian @ (scale * f))
    fit = 2.0 * mu * (g.degrees ** (2.0 * sigma - 1.0))[:, np.newaxis] * (f - y)
    return smooth + fit
