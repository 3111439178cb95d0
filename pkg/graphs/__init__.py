from graphs.base import FeatureSet, Graph
from graphs.builders import (
    from_edge_list,
    from_matrix,
    from_networkx,
    knn_similarity,
    rbf_similarity,
)
from graphs.io import read_edge_list, read_features, write_edge_list
from graphs.traversal import connected_components, is_connected

__all__ = [
    "FeatureSet",
    "Graph",
    "connected_components",
    "from_edge_list",
    "from_matrix",
    "from_networkx",
    "is_connected",
    "knn_similarity",
    "rbf_similarity",
    "read_edge_list",
    "read_features",
    "write_edge_list",
]
