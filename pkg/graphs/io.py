"""Whitespace-separated text formats: edge lists (``u v [w]``), features, and a shared record reader."""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator
from pathlib import Path

from graphs.base import FeatureSet, Graph
from graphs.builders import from_edge_list

logger = logging.getLogger(__name__)


def iter_records(path: str | Path, min_fields: int, max_fields: int) -> Iterator[tuple[int, list[str]]]:
    """Yield (line number, tokens) for every non-blank, non-comment line.

    Lines whose first non-space character is ``#`` are comments.
    """
    path = Path(path)
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            tokens = stripped.split()
            if not min_fields <= len(tokens) <= max_fields:
                expected = str(min_fields) if min_fields == max_fields else f"{min_fields}-{max_fields}"
                raise ValueError(f"{path}:{lineno}: expected {expected} fields, got {len(tokens)}")
            yield lineno, tokens


def read_edge_list(
    path: str | Path,
    ignore_weights: bool = False,
    allow_self_loops: bool = False,
) -> Graph:
    """Load ``u v [w]`` lines into a Graph.

    With ``ignore_weights`` every listed pair becomes a unit link, however many
    times or with whatever positive weight it appears.
    """
    entries: list[tuple[str, str, float]] = []
    seen: set[frozenset] = set()
    for lineno, tokens in iter_records(path, 2, 3):
        u, v = tokens[0], tokens[1]
        w = 1.0
        if len(tokens) == 3:
            try:
                w = float(tokens[2])
            except ValueError:
                raise ValueError(f"{path}:{lineno}: weight {tokens[2]!r} is not a number") from None
            if not (w > 0 and math.isfinite(w)):
                raise ValueError(f"{path}:{lineno}: weight must be positive and finite, got {tokens[2]!r}")
        if u == v and not allow_self_loops:
            raise ValueError(f"{path}:{lineno}: self-loop on {u!r} is not allowed")
        if ignore_weights:
            pair = frozenset((u, v))
            if pair in seen:
                continue
            seen.add(pair)
            w = 1.0
        entries.append((u, v, w))

    graph = from_edge_list(entries, allow_self_loops=allow_self_loops)
    logger.info(
        "Loaded graph %s: %d nodes, %d edges (%d ordered pairs), total weight %g",
        path, graph.n, graph.edge_count(), graph.ordered_pair_count(), graph.m2 / 2,
    )
    return graph


def write_edge_list(graph: Graph, path: str | Path) -> None:
    path = Path(path)
    upper = graph.weights.tocoo()
    lines = [f"# {graph.n} nodes, {graph.edge_count()} edges"]
    for i, j, w in sorted(zip(upper.row, upper.col, upper.data)):
        if i <= j:
            lines.append(f"{graph.node_ids[i]} {graph.node_ids[j]} {float(w)!r}")
    try:
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    except OSError as e:
        raise OSError(f"Failed to write edge list {path}: {e}") from e
    logger.info("Wrote %d edges to %s", len(lines) - 1, path)


def read_features(path: str | Path) -> FeatureSet:
    rows = []
    for lineno, tokens in iter_records(path, 1, 1_000_000):
        try:
            rows.append([float(t) for t in tokens])
        except ValueError:
            raise ValueError(f"{path}:{lineno}: non-numeric feature value") from None
    features = FeatureSet.from_rows(rows)
    logger.info("Loaded %d instances with %d attributes from %s", features.n, features.dim, path)
    return features
