import csv
import logging
from pathlib import Path

from graphs.base import Graph
from learning.base import ClassificationResult

logger = logging.getLogger(__name__)


def write_scores_csv(
    result: ClassificationResult,
    graph: Graph,
    path: str | Path,
    class_names: tuple[str, ...] = (),
) -> None:
    """CSV with header ``node,label,score_0,...,score_{K-1}``, one row per node."""
    path = Path(path)
    header = ["node", "label"] + [f"score_{k}" for k in range(result.k)]
    try:
        with path.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            for i, node_id in enumerate(graph.node_ids):
                label = int(result.labels[i])
                writer.writerow(
                    [node_id, class_names[label] if class_names else label]
                    + [repr(float(s)) for s in result.scores[i]]
                )
    except OSError as e:
        raise OSError(f"Failed to write scores to {path}: {e}") from e
    logger.info("Wrote scores for %d nodes to %s", graph.n, path)
