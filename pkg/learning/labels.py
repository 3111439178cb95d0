"""Labeling matrix Y and the ``node_id class_name`` labels file."""

from __future__ import annotations

import logging
from pathlib import Path

import numpy as np

from graphs.base import Graph
from graphs.io import iter_records
from learning.base import LabelNormalization, LabelSet

logger = logging.getLogger(__name__)


def build_label_matrix(labels: LabelSet, n: int) -> np.ndarray:
    """N x K matrix with Y_ik = 1 iff node i is labeled k.

    In per-class mode each nonzero entry becomes 1 / (labeled count of class k).
    """
    labels.check_nodes(n)
    y = np.zeros((n, labels.k))
    if labels.assignments:
        nodes = np.fromiter(labels.assignments.keys(), dtype=int)
        classes = np.fromiter(labels.assignments.values(), dtype=int)
        y[nodes, classes] = 1.0

    if labels.normalization is LabelNormalization.PER_CLASS:
        counts = labels.counts()
        missing = labels.missing_classes()
        if missing:
            raise ValueError(
                f"Per-class normalization needs at least one labeled node per class; "
                f"class {labels.class_name(missing[0])} has none"
            )
        y /= counts[np.newaxis, :]
    return y


def read_labels(
    path: str | Path,
    graph: Graph,
    class_names: list[str] | None = None,
    normalization: LabelNormalization = LabelNormalization.RAW,
) -> LabelSet:
    """Parse ``node_id class_name`` lines.

    Class names are numbered in first-appearance order, continuing any names
    passed in ``class_names`` so several files can share one numbering.
    """
    names = list(class_names or [])
    index = {name: i for i, name in enumerate(names)}
    pairs = []
    for lineno, (node_id, class_name) in iter_records(path, 2, 2):
        try:
            node = graph.node_index(node_id)
        except ValueError:
            raise ValueError(f"{path}:{lineno}: node {node_id!r} is not in the graph") from None
        if class_name not in index:
            index[class_name] = len(names)
            names.append(class_name)
        pairs.append((node, index[class_name]))

    if len(names) < 2:
        raise ValueError(f"{path}: labels must mention at least two classes, found {names}")
    labels = LabelSet.from_pairs(pairs, k=len(names), normalization=normalization, class_names=tuple(names))
    logger.info("Loaded %d labeled nodes in %d classes from %s", len(labels.nodes), labels.k, path)
    return labels
