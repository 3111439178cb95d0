from walks.diagnostics import (
    WalkDiagnostics,
    diagnose,
    expected_visits,
    stationary_distribution,
    transition_matrix,
)
from walks.limits import LimitPrediction, limit_class_weights
from walks.monte_carlo import monte_carlo_visits

__all__ = [
    "LimitPrediction",
    "WalkDiagnostics",
    "diagnose",
    "expected_visits",
    "limit_class_weights",
    "monte_carlo_visits",
    "stationary_distribution",
    "transition_matrix",
]
