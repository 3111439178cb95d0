from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from config import settings
from learning.base import LabelNormalization


class EvaluationSet(str, Enum):
    UNLABELED = "unlabeled"
    ALL = "all"


@dataclass(frozen=True)
class SweepSpec:
    """Grid and trial settings shared by every sweep."""

    alphas: Sequence[float] = field(default_factory=lambda: tuple(settings.alpha_grid))
    sigmas: Sequence[float] = field(default_factory=lambda: tuple(settings.sigma_grid))
    trials: int = 1
    labels_per_class: int = 1
    seed: int = 0
    evaluation_set: EvaluationSet = EvaluationSet.UNLABELED
    normalization: LabelNormalization = LabelNormalization.RAW
    alpha_cap: float = field(default_factory=lambda: settings.alpha_cap)

    def __post_init__(self) -> None:
        alphas = tuple(float(a) for a in self.alphas)
        sigmas = tuple(float(s) for s in self.sigmas)
        if not alphas or not sigmas:
            raise ValueError("Sweep grids must be nonempty")
        if len(set(alphas)) != len(alphas) or len(set(sigmas)) != len(sigmas):
            raise ValueError("Sweep grids must not repeat values")
        for a in alphas:
            if not 0 < a < 1:
                raise ValueError(f"Sweep alphas must lie in (0, 1), got {a!r}")
            if a > self.alpha_cap:
                raise ValueError(f"alpha {a!r} exceeds the cap {self.alpha_cap!r}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.labels_per_class < 1:
            raise ValueError(f"labels per class must be >= 1, got {self.labels_per_class}")
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "sigmas", sigmas)
        object.__setattr__(self, "evaluation_set", EvaluationSet(self.evaluation_set))
        object.__setattr__(self, "normalization", LabelNormalization(self.normalization))

    @property
    def cells(self) -> list[tuple[float, float]]:
        """(sigma, alpha) pairs in output order."""
        return [(s, a) for s in self.sigmas for a in self.alphas]


@dataclass(frozen=True)
class SweepRow:
    sigma: float
    alpha: float
    trial: int
    modularity: float
    precision: float | None
    iterations: int
    labels_per_class: int


@dataclass(frozen=True)
class AggregateRow:
    sigma: float
    alpha: float
    labels_per_class: int
    trials: int
    modularity_mean: float
    modularity_std: float
    precision_mean: float | None
    precision_std: float | None


@dataclass
class SweepResult:
    rows: list[SweepRow] = field(default_factory=list)

    def aggregates(self) -> list[AggregateRow]:
        """Per-(labels_per_class, sigma, alpha) mean and sample std (0 for one trial)."""
        groups: dict[tuple[int, float, float], list[SweepRow]] = {}
        for row in self.rows:
            groups.setdefault((row.labels_per_class, row.sigma, row.alpha), []).append(row)

        out = []
        for (lpc, sigma, alpha), rows in groups.items():
            mod_mean, mod_std = _mean_std([r.modularity for r in rows])
            precisions = [r.precision for r in rows if r.precision is not None]
            prec_mean, prec_std = _mean_std(precisions) if precisions else (None, None)
            out.append(AggregateRow(
                sigma=sigma,
                alpha=alpha,
                labels_per_class=lpc,
                trials=len(rows),
                modularity_mean=mod_mean,
                modularity_std=mod_std,
                precision_mean=prec_mean,
                precision_std=prec_std,
            ))
        return out

    def extend(self, other: SweepResult) -> None:
        self.rows.extend(other.rows)


def _mean_std(values: list[float]) -> tuple[float, float]:
    arr = np.asarray(values, dtype=float)
    std = float(arr.std(ddof=1)) if arr.size > 1 else 0.0
    return float(arr.mean()), std
