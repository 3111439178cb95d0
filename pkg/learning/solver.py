"""Closed-form and fixed-point solvers for the generalized semi-supervised problem.

    F = (1 - alpha) (I - alpha D^{-sigma} W D^{sigma-1})^{-1} Y

sigma = 1 gives the Standard Laplacian method, sigma = 1/2 the Normalized
Laplacian method and sigma = 0 the PageRank based method.
"""

from __future__ import annotations

import logging
import math
from enum import Enum

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import splu

from config import settings
from graphs.base import Graph
from learning.base import ClassificationResult, MethodParams

logger = logging.getLogger(__name__)


class SolverMode(Enum):
    ITERATIVE = "iterative"
    DENSE_DIRECT = "dense-direct"
    SPARSE_DIRECT = "sparse-direct"
    AUTO = "auto"


class NonConvergenceError(RuntimeError):
    def __init__(self, iterations: int, residual: float, tolerance: float):
        self.iterations = iterations
        self.residual = residual
        self.tolerance = tolerance
        super().__init__(
            f"Fixed-point iteration did not converge in {iterations} sweeps "
            f"(residual {residual:.3e} > tolerance {tolerance:.1e})"
        )


def propagation_matrix(g: Graph, sigma: float) -> sp.csr_matrix:
    """Sparse D^{-sigma} W D^{sigma-1}; diagonally similar to the walk matrix D^{-1} W."""
    g.require_positive_degrees("solve")
    d = g.degrees
    return (sp.diags(d ** -sigma) @ g.weights @ sp.diags(d ** (sigma - 1.0))).tocsr()


def sweeps_needed(alpha: float, tolerance: float) -> int:
    """A-priori sweep count for the iteration error to shrink below tolerance."""
    return math.ceil(math.log(tolerance) / math.log(alpha))


def classify(scores: np.ndarray) -> np.ndarray:
    """Row-wise argmax; ties go to the lowest class index, all-zero rows to class 0."""
    scores = np.asarray(scores, dtype=float)
    if np.isnan(scores).any():
        raise ValueError("Cannot classify NaN scores")
    if scores.ndim != 2 or scores.shape[1] == 0:
        raise ValueError(f"Scores must be an N x K matrix, got shape {scores.shape}")
    return np.argmax(scores, axis=1)


def zero_rows(scores: np.ndarray) -> np.ndarray:
    """Rows with no positive score (nodes the labels never reach)."""
    return np.flatnonzero(~np.any(scores != 0, axis=1))


def solve(
    g: Graph,
    y: np.ndarray,
    params: MethodParams,
    mode: SolverMode | str | None = None,
    dense_cap: int | None = None,
) -> ClassificationResult:
    """Compute the classification functions F for every column of Y."""
    mode = SolverMode(mode or settings.solver_mode)
    dense_cap = settings.dense_cap if dense_cap is None else dense_cap
    y = _check_label_matrix(g, y)
    t = propagation_matrix(g, params.sigma)

    if mode is SolverMode.AUTO:
        if sweeps_needed(params.alpha, params.tolerance) <= params.max_iterations:
            mode = SolverMode.ITERATIVE
        else:
            mode = SolverMode.SPARSE_DIRECT

    history: list[float] = []
    if mode is SolverMode.ITERATIVE:
        f, iterations, residual, history = _fixed_point(t, y, params)
    elif mode is SolverMode.DENSE_DIRECT:
        if g.n > dense_cap:
            raise ValueError(
                f"Dense-direct solve refused for n={g.n} > dense cap {dense_cap}; "
                f"use the iterative or sparse-direct mode"
            )
        a = np.eye(g.n) - params.alpha * t.toarray()
        f = (1.0 - params.alpha) * np.linalg.solve(a, y)
        iterations, residual = 0, _system_residual(t, f, y, params.alpha)
    else:
        a = (sp.identity(g.n, format="csc") - params.alpha * t).tocsc()
        f = (1.0 - params.alpha) * splu(a).solve(y)
        iterations, residual = 0, _system_residual(t, f, y, params.alpha)

    if mode is not SolverMode.ITERATIVE:
        # Direct factorizations can leave roundoff just below zero
        np.maximum(f, 0.0, out=f)

    labels = classify(f)
    unreachable = zero_rows(f)
    if unreachable.size:
        logger.warning(
            "%d node(s) received no score from any class; labeled class 0", unreachable.size
        )
    logger.debug(
        "Solved sigma=%g alpha=%g (%s): n=%d K=%d iterations=%d residual=%.3e",
        params.sigma, params.alpha, mode.value, g.n, y.shape[1], iterations, residual,
    )
    return ClassificationResult(
        scores=f,
        labels=labels,
        iterations=iterations,
        residual=residual,
        mode=mode.value,
        unreachable=unreachable,
        residual_history=history,
    )


# ------------------------------------------------------------------
# Internal helpers
# ------------------------------------------------------------------


def _check_label_matrix(g: Graph, y: np.ndarray) -> np.ndarray:
    y = np.asarray(y, dtype=float)
    if y.ndim != 2 or y.shape[0] != g.n:
        raise ValueError(f"Label matrix must have shape ({g.n}, K), got {y.shape}")
    if not np.all(np.isfinite(y)) or (y < 0).any():
        raise ValueError("Label matrix must be finite and nonnegative")
    empty = np.flatnonzero(~np.any(y > 0, axis=0))
    if empty.size:
        raise ValueError(f"Label matrix column {empty[0]} has no labeled node")
    return y


def _fixed_point(
    t: sp.csr_matrix, y: np.ndarray, params: MethodParams
) -> tuple[np.ndarray, int, float, list[float]]:
    """Iterate F <- (1 - alpha) Y + alpha T F from F = Y.

    The iteration matrix alpha T has spectral radius alpha, so this converges
    for every alpha in (0, 1).
    """
    alpha = params.alpha
    base = (1.0 - alpha) * y
    f = y.copy()
    history: list[float] = []
    residual = math.inf
    for sweep in range(1, params.max_iterations + 1):
        f_next = base + alpha * (t @ f)
        change = np.abs(f_next - f).sum(axis=0)
        norm = np.abs(f).sum(axis=0)
        residual = float(np.max(change / norm))
        history.append(residual)
        f = f_next
        if residual <= params.tolerance:
            return f, sweep, residual, history
        if sweep % 1000 == 0:
            logger.debug("sweep %d: residual %.3e", sweep, residual)
    raise NonConvergenceError(params.max_iterations, residual, params.tolerance)


def _system_residual(t: sp.csr_matrix, f: np.ndarray, y: np.ndarray, alpha: float) -> float:
    """max_k ||(I - alpha T) F_k - (1 - alpha) Y_k||_1 / ||(1 - alpha) Y_k||_1."""
    rhs = (1.0 - alpha) * y
    r = np.abs(f - alpha * (t @ f) - rhs).sum(axis=0)
    return float(np.max(r / np.abs(rhs).sum(axis=0)))
