"""Bundled datasets."""

from __future__ import annotations

from pathlib import Path

from config import settings
from evaluation.base import Partition, read_partition
from graphs.base import Graph
from graphs.io import read_edge_list

LES_MISERABLES_EDGES = "lesmis.edgelist"
LES_MISERABLES_CLUSTERS = "lesmis.clusters"


def fixtures_dir() -> Path:
    if settings.fixtures_dir:
        return Path(settings.fixtures_dir)
    return Path(__file__).resolve().parent.parent / "fixtures"


def load_les_miserables(weighted: bool = False) -> tuple[Graph, Partition]:
    """Les Miserables co-appearance graph with its six-cluster reference partition.

    By default every co-appearing pair is a unit link; ``weighted=True`` keeps
    the number of shared chapters as the link weight.
    """
    root = fixtures_dir()
    graph = read_edge_list(root / LES_MISERABLES_EDGES, ignore_weights=not weighted)
    truth = read_partition(root / LES_MISERABLES_CLUSTERS, graph)
    return graph, truth
