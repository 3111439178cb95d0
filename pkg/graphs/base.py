from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected weighted similarity graph.

    ``weights`` is a symmetric CSR matrix whose stored entries are strictly
    positive; ``degrees[i]`` is the weighted degree d_i = sum_j w_ij (a
    self-loop weight counts once). Instances are immutable and safe to share.
    """

    weights: sp.csr_matrix
    degrees: np.ndarray
    node_ids: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(self.node_ids)})
        self.degrees.setflags(write=False)
        for arr in (self.weights.data, self.weights.indices, self.weights.indptr):
            arr.setflags(write=False)

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    @property
    def m2(self) -> float:
        """Total weight sum_i d_i (twice the undirected weight when loop-free)."""
        return float(self.degrees.sum())

    def neighbors(self, i: int) -> list[tuple[int, float]]:
        start, end = self.weights.indptr[i], self.weights.indptr[i + 1]
        return [
            (int(j), float(w))
            for j, w in zip(self.weights.indices[start:end], self.weights.data[start:end])
        ]

    def node_index(self, node_id: str) -> int:
        try:
            return self._index[str(node_id)]
        except KeyError:
            raise ValueError(f"Unknown node id {node_id!r}") from None

    def edge_count(self) -> int:
        """Number of unordered edges, self-loops included once."""
        loops = int(np.count_nonzero(self.weights.diagonal()))
        return (self.weights.nnz - loops) // 2 + loops

    def ordered_pair_count(self) -> int:
        """Stored (i, j) entries, i.e. the number of nonzeros of W."""
        return int(self.weights.nnz)

    def isolated_nodes(self) -> np.ndarray:
        return np.flatnonzero(self.degrees <= 0)

    def require_positive_degrees(self, operation: str) -> None:
        """Reject graphs where D^{-1} or D^{-sigma} is undefined."""
        isolated = self.isolated_nodes()
        if isolated.size:
            names = ", ".join(self.node_ids[i] for i in isolated[:5])
            raise ValueError(
                f"{operation} requires every node to have positive degree; "
                f"{isolated.size} isolated node(s): {names}"
            )

    def to_dense(self) -> np.ndarray:
        return self.weights.toarray()


@dataclass(frozen=True, eq=False)
class FeatureSet:
    """n instances described by dim real attributes (normalization is the caller's job)."""

    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=float)
        if values.ndim != 2 or values.shape[1] < 1:
            raise ValueError(f"Features must be an n x dim array with dim >= 1, got shape {values.shape}")
        if not np.all(np.isfinite(values)):
            raise ValueError("Features contain non-finite values")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_rows(cls, rows) -> FeatureSet:
        rows = [list(map(float, row)) for row in rows]
        widths = {len(row) for row in rows}
        if len(widths) > 1:
            raise ValueError(f"Feature rows have differing lengths: {sorted(widths)}")
        return cls(np.array(rows, dtype=float))

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def dim(self) -> int:
        return self.values.shape[1]
