from learning.base import (
    ClassificationResult,
    LabelNormalization,
    LabelSet,
    Method,
    MethodParams,
    alpha_from_mu,
    mu_from_alpha,
)
from learning.export import write_scores_csv
from learning.labels import build_label_matrix, read_labels
from learning.objective import objective, objective_gradient
from learning.solver import (
    NonConvergenceError,
    SolverMode,
    classify,
    propagation_matrix,
    solve,
)

__all__ = [
    "ClassificationResult",
    "LabelNormalization",
    "LabelSet",
    "Method",
    "MethodParams",
    "NonConvergenceError",
    "SolverMode",
    "alpha_from_mu",
    "build_label_matrix",
    "classify",
    "mu_from_alpha",
    "objective",
    "objective_gradient",
    "propagation_matrix",
    "read_labels",
    "solve",
    "write_scores_csv",
]
