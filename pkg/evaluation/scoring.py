from __future__ import annotations

import logging
from collections.abc import Iterable

import numpy as np

from evaluation.base import EvalReport, Partition
from evaluation.modularity import modularity
from graphs.base import Graph

logger = logging.getLogger(__name__)

PRECISION_MODES = ("micro", "macro")


def score_against(
    pred: Partition,
    truth: Partition,
    evaluated: Iterable[int] | None = None,
    *,
    labeled: Iterable[int] | None = None,
    graph: Graph | None = None,
    precision_mode: str = "micro",
) -> EvalReport:
    """Compare a predicted partition with a reference one.

    Classes are matched by index: ``pred`` and ``truth`` must share one class
    numbering (labeled seeds carry the true class ids). ``evaluated`` defaults
    to every node not in ``labeled``. When ``graph`` is given the report also
    carries the modularity of ``pred``.
    """
    if pred.n != truth.n:
        raise ValueError(f"Predicted partition has {pred.n} nodes, reference has {truth.n}")
    if pred.k != truth.k:
        raise ValueError(f"Class count mismatch: predicted k={pred.k}, reference k={truth.k}")
    if precision_mode not in PRECISION_MODES:
        raise ValueError(f"precision_mode must be one of {PRECISION_MODES}, got {precision_mode!r}")

    nodes = _evaluated_nodes(truth.n, evaluated, labeled)
    k = truth.k
    confusion = np.zeros((k, k), dtype=np.int64)
    np.add.at(confusion, (truth.assignment[nodes], pred.assignment[nodes]), 1)

    correct = np.diag(confusion).astype(float)
    predicted = confusion.sum(axis=0)
    actual = confusion.sum(axis=1)
    flags: list[str] = []
    precision = _safe_ratio(correct, predicted, "predicted", flags)
    recall = _safe_ratio(correct, actual, "true", flags)

    total = int(confusion.sum())
    micro = float(correct.sum() / total) if total else 0.0
    if not total:
        flags.append("no evaluated nodes")
    macro = float(precision.mean())

    report = EvalReport(
        micro_precision=micro,
        macro_precision=macro,
        precision=precision,
        recall=recall,
        confusion=confusion,
        evaluated=total,
        modularity=modularity(graph, pred) if graph is not None else None,
        class_names=truth.class_names,
        flags=flags,
        precision_mode=precision_mode,
    )
    for flag in flags:
        logger.warning("Evaluation: %s", flag)
    logger.debug(
        "Scored %d nodes: micro precision %.4f, macro precision %.4f%s",
        total, micro, macro,
        "" if report.modularity is None else f", modularity {report.modularity:.4f}",
    )
    return report


def _evaluated_nodes(n: int, evaluated: Iterable[int] | None, labeled: Iterable[int] | None) -> np.ndarray:
    if evaluated is not None:
        nodes = np.asarray(list(evaluated), dtype=int)
        if nodes.size and (nodes.min() < 0 or nodes.max() >= n):
            raise ValueError(f"Evaluated node indices must lie in 0..{n - 1}")
        return nodes
    mask = np.ones(n, dtype=bool)
    if labeled is not None:
        mask[np.asarray(list(labeled), dtype=int)] = False
    return np.flatnonzero(mask)


def _safe_ratio(num: np.ndarray, den: np.ndarray, what: str, flags: list[str]) -> np.ndarray:
    # 0/0 is reported as 0, never NaN
    out = np.zeros_like(num, dtype=float)
    nonzero = den > 0
    out[nonzero] = num[nonzero] / den[nonzero]
    for c in np.flatnonzero(~nonzero):
        flags.append(f"class {int(c)} has no {what} nodes")
    return out
