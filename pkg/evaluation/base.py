from __future__ import annotations

import csv
import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from graphs.base import Graph
from graphs.io import iter_records

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Partition:
    """Total assignment of nodes to k classes. Empty classes are allowed."""

    assignment: np.ndarray
    k: int
    class_names: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        assignment = np.array(self.assignment, dtype=int)
        if assignment.ndim != 1:
            raise ValueError("Partition assignment must be one-dimensional")
        if self.k < 1:
            raise ValueError(f"Partition needs k >= 1, got {self.k}")
        if assignment.size and (assignment.min() < 0 or assignment.max() >= self.k):
            raise ValueError(f"Partition classes must lie in 0..{self.k - 1}")
        if self.class_names and len(self.class_names) != self.k:
            raise ValueError(f"Got {len(self.class_names)} class names for k={self.k}")
        assignment.setflags(write=False)
        object.__setattr__(self, "assignment", assignment)

    @property
    def n(self) -> int:
        return self.assignment.size

    def sizes(self) -> np.ndarray:
        return np.bincount(self.assignment, minlength=self.k)

    def members(self, c: int) -> np.ndarray:
        return np.flatnonzero(self.assignment == c)

    def empty_classes(self) -> list[int]:
        return [int(c) for c in np.flatnonzero(self.sizes() == 0)]

    def class_name(self, c: int) -> str:
        return self.class_names[c] if self.class_names else str(c)


@dataclass
class EvalReport:
    """Classification quality against a reference partition (and the graph, when given)."""

    micro_precision: float
    macro_precision: float
    precision: np.ndarray
    recall: np.ndarray
    confusion: np.ndarray  # rows: true class, columns: predicted class
    evaluated: int
    modularity: float | None = None
    class_names: tuple[str, ...] = ()
    flags: list[str] = field(default_factory=list)
    precision_mode: str = "micro"

    def rows(self) -> list[dict]:
        """One CSV row per class plus a summary row."""
        k = self.confusion.shape[0]
        names = self.class_names or tuple(str(c) for c in range(k))
        rows = []
        for c in range(k):
            rows.append({
                "class": names[c],
                "precision": self.precision[c],
                "recall": self.recall[c],
                "support": int(self.confusion[c].sum()),
                "predicted": int(self.confusion[:, c].sum()),
                "modularity": "",
                "precision_mode": "",
            })
        rows.append({
            "class": "all",
            "precision": self.micro_precision if self.precision_mode == "micro" else self.macro_precision,
            "recall": float(np.mean(self.recall)) if k else 0.0,
            "support": self.evaluated,
            "predicted": self.evaluated,
            "modularity": "" if self.modularity is None else self.modularity,
            "precision_mode": self.precision_mode,
        })
        return rows


REPORT_FIELDS = ["class", "precision", "recall", "support", "predicted", "modularity", "precision_mode"]


def write_report_csv(report: EvalReport, path: str | Path | None = None, stream=None) -> None:
    """Write report rows to ``path`` (or an open text stream)."""
    if path is None:
        _write_rows(report, stream)
        return
    path = Path(path)
    try:
        with path.open("w", newline="", encoding="utf-8") as fh:
            _write_rows(report, fh)
    except OSError as e:
        raise OSError(f"Failed to write evaluation report {path}: {e}") from e


def _write_rows(report: EvalReport, fh) -> None:
    writer = csv.DictWriter(fh, fieldnames=REPORT_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in report.rows():
        writer.writerow({
            key: repr(float(value)) if isinstance(value, (float, np.floating)) else value
            for key, value in row.items()
        })


# ------------------------------------------------------------------
# Partition files
# ------------------------------------------------------------------


def read_partition(path: str | Path, graph: Graph, class_names: list[str] | None = None) -> Partition:
    """Read a total assignment from ``node_id class`` lines or a scores CSV.

    Class tokens are numbered in first-appearance order after any names given
    in ``class_names``; pass the reference partition's names when reading a
    prediction so both files share one numbering. A file whose first line is
    a ``node,label,...`` header is read as the scores CSV written by classify.
    """
    path = Path(path)
    names = list(class_names or [])
    index = {name: i for i, name in enumerate(names)}
    assignment = np.full(graph.n, -1, dtype=int)

    for lineno, node_id, token in _partition_records(path):
        try:
            node = graph.node_index(node_id)
        except ValueError:
            raise ValueError(f"{path}:{lineno}: node {node_id!r} is not in the graph") from None
        if token not in index:
            index[token] = len(names)
            names.append(token)
        assignment[node] = index[token]

    missing = np.flatnonzero(assignment < 0)
    if missing.size:
        raise ValueError(
            f"{path}: partition must assign every node; {missing.size} missing "
            f"(first: {graph.node_ids[missing[0]]!r})"
        )
    partition = Partition(assignment=assignment, k=len(names), class_names=tuple(names))
    if partition.empty_classes():
        logger.warning("Partition %s has empty classes: %s", path, partition.empty_classes())
    logger.info("Loaded partition %s: %d nodes in %d classes", path, partition.n, partition.k)
    return partition


def _partition_records(path: Path):
    with path.open(encoding="utf-8") as fh:
        first = fh.readline()
    if first.startswith("node,label"):
        with path.open(newline="", encoding="utf-8") as fh:
            for lineno, row in enumerate(csv.DictReader(fh), start=2):
                yield lineno, row["node"], row["label"]
        return
    for lineno, (node_id, token) in iter_records(path, 2, 2):
        yield lineno, node_id, token


def write_partition(partition: Partition, path: str | Path, node_ids: tuple[str, ...]) -> None:
    """Write ``node_id class`` lines (class names when known, else indices)."""
    path = Path(path)
    lines = [f"{node_ids[i]} {partition.class_name(c)}" for i, c in enumerate(partition.assignment)]
    try:
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    except OSError as e:
        raise OSError(f"Failed to write partition {path}: {e}") from e
