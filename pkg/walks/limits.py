"""Limit behaviour as alpha -> 1: which class, if any, attracts every node.

Near alpha = 1 the classification functions approach
D^{1-sigma} 1 (1^T D 1)^{-1} sum_{labeled i in k} Y_ik d_i^sigma, so the class
with the largest label weight sum_i Y_ik d_i^sigma takes over the whole graph.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from graphs.base import Graph
from learning.base import LabelSet
from learning.labels import build_label_matrix

logger = logging.getLogger(__name__)

# Relative gap the best class weight must exceed to count as dominating
DOMINANCE_GAP = 1e-12


@dataclass(frozen=True)
class LimitPrediction:
    weights: np.ndarray
    dominating: int | None
    margin: float  # (best - runner-up) / best


def limit_class_weights(g: Graph, labels: LabelSet, sigma: float) -> LimitPrediction:
    missing = labels.missing_classes()
    if missing:
        raise ValueError(f"Class {labels.class_name(missing[0])} has no labeled node")
    y = build_label_matrix(labels, g.n)
    nodes = np.asarray(labels.nodes)
    if np.any(g.degrees[nodes] <= 0):
        raise ValueError("Labeled nodes must have positive degree")

    weights = (g.degrees[nodes] ** sigma) @ y[nodes]
    order = np.argsort(-weights, kind="stable")
    best, runner_up = weights[order[0]], weights[order[1]]
    margin = float((best - runner_up) / best) if best > 0 else 0.0

    dominating = int(order[0]) if margin > DOMINANCE_GAP else None
    if dominating is None and margin > 0:
        logger.warning("Near-tie between class weights %.6g and %.6g; no dominating class", best, runner_up)
    logger.debug("Limit class weights (sigma=%g): %s -> %s", sigma, weights, dominating)
    return LimitPrediction(weights=weights, dominating=dominating, margin=margin)
