"""Run (sigma, alpha) sweeps over labeled-point trials and score every cell."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace

import numpy as np

from config import settings
from evaluation.base import Partition
from evaluation.modularity import modularity
from evaluation.scoring import score_against
from experiments.base import AggregateRow, EvaluationSet, SweepResult, SweepRow, SweepSpec
from graphs.base import Graph
from learning.base import LabelNormalization, LabelSet, MethodParams
from learning.labels import build_label_matrix
from learning.solver import SolverMode, solve
from synth.selection import random_labels

logger = logging.getLogger(__name__)


class SweepRunner:
    """Solve, classify and score a graph over a (sigma, alpha) grid.

    Every trial draws its labeled nodes from ``default_rng([seed, trial])``,
    so rows depend only on the sweep settings and never on ``max_workers``.
    """

    def __init__(
        self,
        graph: Graph,
        truth: Partition | None,
        spec: SweepSpec,
        solver_mode: SolverMode | str | None = None,
        max_workers: int | None = None,
    ):
        if truth is not None and truth.n != graph.n:
            raise ValueError(f"Reference partition has {truth.n} nodes but the graph has {graph.n}")
        graph.require_positive_degrees("sweep")
        self.graph = graph
        self.truth = truth
        self.spec = spec
        self.solver_mode = solver_mode
        self.max_workers = max_workers or settings.max_workers

    def random_label_trials(self) -> SweepResult:
        """Repeat the grid over ``spec.trials`` independent random label draws."""
        if self.truth is None:
            raise ValueError("Random labeled-point trials need a reference partition")
        empty = self.truth.empty_classes()
        if empty:
            raise ValueError(f"Reference class {self.truth.class_name(empty[0])} is empty")

        with ThreadPoolExecutor(max_workers=self.max_workers) as pool:
            per_trial = list(pool.map(self._run_trial, range(self.spec.trials)))

        result = self._collect(per_trial)
        logger.info(
            "Random-label sweep finished: %d trials x %d cells, %d labels per class",
            self.spec.trials, len(self.spec.cells), self.spec.labels_per_class,
        )
        return result

    def alpha_sweep(self, labels: LabelSet) -> SweepResult:
        """Run the full grid once with a fixed label set.

        Classes with no labeled node are left out of the solve and never predicted.
        """
        if self.truth is not None and labels.k != self.truth.k:
            raise ValueError(f"Labels have k={labels.k} classes, reference partition has k={self.truth.k}")
        counts = labels.counts()
        if not counts.any():
            raise ValueError("Alpha sweep needs at least one labeled node")
        rows = self._run_grid(labels, trial=0, labels_per_class=int(counts[counts > 0].min()))
        logger.info("Alpha sweep finished: %d cells", len(rows))
        return SweepResult(rows=rows)

    def labeled_quantity_sweep(self, quantities: Sequence[int]) -> SweepResult:
        """Repeat the trial protocol once per labels-per-class value."""
        if not quantities:
            raise ValueError("labeled_quantity_sweep needs at least one quantity")
        result = SweepResult()
        base_spec = self.spec
        try:
            for q in quantities:
                self.spec = replace(base_spec, labels_per_class=int(q))
                result.extend(self.random_label_trials())
        finally:
            self.spec = base_spec
        return result

    # ------------------------------------------------------------------
    # Internal helpers
    # ------------------------------------------------------------------

    def _run_trial(self, trial: int) -> list[SweepRow]:
        rng = np.random.default_rng([self.spec.seed, trial])
        labels = random_labels(self.truth, self.spec.labels_per_class, rng)
        return self._run_grid(labels, trial, self.spec.labels_per_class)

    def _run_grid(self, labels: LabelSet, trial: int, labels_per_class: int) -> list[SweepRow]:
        y, present = self._label_matrix(labels)
        rows = []
        for sigma, alpha in self.spec.cells:
            result = solve(self.graph, y, MethodParams(sigma=sigma, alpha=alpha), mode=self.solver_mode)
            pred = Partition(assignment=present[result.labels], k=labels.k)
            rows.append(SweepRow(
                sigma=sigma,
                alpha=alpha,
                trial=trial,
                modularity=modularity(self.graph, pred),
                precision=self._precision(pred, labels),
                iterations=result.iterations,
                labels_per_class=labels_per_class,
            ))
        return rows

    def _label_matrix(self, labels: LabelSet) -> tuple[np.ndarray, np.ndarray]:
        """Y restricted to the classes that have a labeled node, plus their indices.

        Classes without labels get no column, so predictions only ever use
        labeled classes and are mapped back to the full numbering.
        """
        counts = labels.counts()
        present = np.flatnonzero(counts)
        if present.size < labels.k:
            logger.debug(
                "Solving over %d of %d classes; unlabeled: %s",
                present.size, labels.k, [labels.class_name(c) for c in labels.missing_classes()],
            )
        y = build_label_matrix(labels.normalized(LabelNormalization.RAW), self.graph.n)[:, present]
        if self.spec.normalization is LabelNormalization.PER_CLASS:
            y /= counts[present][np.newaxis, :]
        return y, present

    def _precision(self, pred: Partition, labels: LabelSet) -> float | None:
        if self.truth is None:
            return None
        if self.spec.evaluation_set is EvaluationSet.ALL:
            report = score_against(pred, self.truth, evaluated=range(self.graph.n))
        else:
            report = score_against(pred, self.truth, labeled=labels.nodes)
        return report.micro_precision

    def _collect(self, per_trial: list[list[SweepRow]]) -> SweepResult:
        # Trial-major output reordered to grid order (sigma, then alpha), then trial
        position = {cell: i for i, cell in enumerate(self.spec.cells)}
        rows = [row for trial_rows in per_trial for row in trial_rows]
        rows.sort(key=lambda r: (position[(r.sigma, r.alpha)], r.trial))
        return SweepResult(rows=rows)


def modularity_criterion(result: SweepResult) -> dict[float, AggregateRow]:
    """For every sigma, the alpha whose mean modularity is highest.

    Earlier grid points win ties.
    """
    if len({row.labels_per_class for row in result.rows}) > 1:
        raise ValueError("modularity_criterion expects a result with a single labels-per-class value")
    best: dict[float, AggregateRow] = {}
    for agg in result.aggregates():
        current = best.get(agg.sigma)
        if current is None or agg.modularity_mean > current.modularity_mean:
            best[agg.sigma] = agg
    for sigma, agg in best.items():
        logger.info(
            "Modularity criterion: sigma=%g -> alpha=%g (mean modularity %.4f)",
            sigma, agg.alpha, agg.modularity_mean,
        )
    return best


def random_label_trials(g: Graph, truth: Partition, spec: SweepSpec, **kwargs) -> SweepResult:
    return SweepRunner(g, truth, spec, **kwargs).random_label_trials()


def alpha_sweep(g: Graph, labels: LabelSet, truth: Partition | None, spec: SweepSpec, **kwargs) -> SweepResult:
    return SweepRunner(g, truth, spec, **kwargs).alpha_sweep(labels)


def labeled_quantity_sweep(
    g: Graph, truth: Partition, spec: SweepSpec, quantities: Sequence[int], **kwargs
) -> SweepResult:
    return SweepRunner(g, truth, spec, **kwargs).labeled_quantity_sweep(quantities)
