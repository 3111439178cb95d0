from experiments.base import AggregateRow, EvaluationSet, SweepResult, SweepRow, SweepSpec
from experiments.fixtures import load_les_miserables
from experiments.results import read_csv, write_csv
from experiments.runner import (
    SweepRunner,
    alpha_sweep,
    labeled_quantity_sweep,
    modularity_criterion,
    random_label_trials,
)

__all__ = [
    "AggregateRow",
    "EvaluationSet",
    "SweepResult",
    "SweepRow",
    "SweepRunner",
    "SweepSpec",
    "alpha_sweep",
    "labeled_quantity_sweep",
    "load_les_miserables",
    "modularity_criterion",
    "random_label_trials",
    "read_csv",
    "write_csv",
]
