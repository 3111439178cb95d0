from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum

import numpy as np

from config import settings


class Method(Enum):
    """Named special cases of the sigma-parameterized framework."""

    STANDARD_LAPLACIAN = 1.0
    NORMALIZED_LAPLACIAN = 0.5
    PAGERANK = 0.0

    @property
    def sigma(self) -> float:
        return self.value


class LabelNormalization(Enum):
    RAW = "raw"
    PER_CLASS = "per-class"  # each column of Y divided by its labeled count


def alpha_from_mu(mu: float) -> float:
    """alpha = 2 / (2 + mu)."""
    if not (mu > 0 and math.isfinite(mu)):
        raise ValueError(f"mu must be a positive finite number, got {mu!r}")
    return 2.0 / (2.0 + mu)


def mu_from_alpha(alpha: float) -> float:
    """mu = 2 (1 - alpha) / alpha."""
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha!r}")
    return 2.0 * (1.0 - alpha) / alpha


@dataclass(frozen=True)
class MethodParams:
    """sigma plus the regularization parameter, stored as alpha."""

    sigma: float
    alpha: float
    tolerance: float = field(default_factory=lambda: settings.solver_tolerance)
    max_iterations: int = field(default_factory=lambda: settings.solver_max_iterations)

    def __post_init__(self) -> None:
        if not math.isfinite(self.sigma):
            raise ValueError(f"sigma must be finite, got {self.sigma!r}")
        if not 0 < self.alpha < 1:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha!r}")
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance!r}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations!r}")

    @property
    def mu(self) -> float:
        return mu_from_alpha(self.alpha)

    @classmethod
    def from_mu(cls, sigma: float, mu: float, **kwargs) -> MethodParams:
        return cls(sigma=sigma, alpha=alpha_from_mu(mu), **kwargs)

    @classmethod
    def for_method(cls, method: Method, alpha: float, **kwargs) -> MethodParams:
        return cls(sigma=method.sigma, alpha=alpha, **kwargs)


@dataclass(frozen=True, eq=False)
class LabelSet:
    """Partial assignment node index -> class index for k classes."""

    k: int
    assignments: dict[int, int]
    normalization: LabelNormalization = LabelNormalization.RAW
    class_names: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError(f"A label set needs at least 2 classes, got k={self.k}")
        for node, c in self.assignments.items():
            if node < 0:
                raise ValueError(f"Labeled node index must be nonnegative, got {node}")
            if not 0 <= c < self.k:
                raise ValueError(f"Node {node} has class {c} outside 0..{self.k - 1}")
        if self.class_names and len(self.class_names) != self.k:
            raise ValueError(f"Got {len(self.class_names)} class names for k={self.k}")
        object.__setattr__(self, "assignments", dict(sorted(self.assignments.items())))

    @classmethod
    def from_pairs(cls, pairs, k: int, **kwargs) -> LabelSet:
        assignments: dict[int, int] = {}
        for node, c in pairs:
            if node in assignments and assignments[node] != c:
                raise ValueError(f"Node {node} labeled with both class {assignments[node]} and {c}")
            assignments[int(node)] = int(c)
        return cls(k=k, assignments=assignments, **kwargs)

    @property
    def nodes(self) -> list[int]:
        return list(self.assignments)

    def counts(self) -> np.ndarray:
        return np.bincount(np.fromiter(self.assignments.values(), dtype=int), minlength=self.k)

    def missing_classes(self) -> list[int]:
        return [int(c) for c in np.flatnonzero(self.counts() == 0)]

    def check_nodes(self, n: int) -> None:
        bad = [node for node in self.assignments if node >= n]
        if bad:
            raise ValueError(f"Labeled node index {bad[0]} out of range for n={n}")

    def normalized(self, mode: LabelNormalization) -> LabelSet:
        return replace(self, normalization=mode)

    def class_name(self, c: int) -> str:
        return self.class_names[c] if self.class_names else str(c)


@dataclass
class ClassificationResult:
    """Classification functions F (N x K) with argmax labels and solver telemetry."""

    scores: np.ndarray
    labels: np.ndarray
    iterations: int
    residual: float
    mode: str = "iterative"
    unreachable: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=int))
    residual_history: list[float] = field(default_factory=list)

    @property
    def k(self) -> int:
        return self.scores.shape[1]
