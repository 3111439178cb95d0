"""End-to-end behaviour on planted graphs and the Les Miserables fixture."""

import numpy as np
import pytest

from config import settings
from experiments.base import SweepSpec
from experiments.runner import random_label_trials
from learning.base import LabelSet, MethodParams
from learning.labels import build_label_matrix
from learning.solver import solve
from synth.planted import PlantedPartitionSpec, planted_partition
from synth.selection import SelectionRule, extreme_degree_labels
from walks.limits import limit_class_weights

pytestmark = pytest.mark.slow

INSTANCES = 20
SEED_SCAN_LIMIT = 200
NEAR_ONE = 0.999


def planted_instance(seed: int):
    spec = PlantedPartitionSpec(sizes=(100, 100), p_in=(0.3, 0.1), p_out=0.05, seed=seed)
    g, truth = planted_partition(spec)
    labels = extreme_degree_labels(g, truth, [SelectionRule.MIN_DEGREE, SelectionRule.MAX_DEGREE])
    return g, truth, labels


def predict(g, labels, sigma: float, alpha: float) -> np.ndarray:
    return solve(g, build_label_matrix(labels, g.n), MethodParams(sigma=sigma, alpha=alpha)).labels


@pytest.fixture(scope="module")
def instances():
    """First 20 seeds whose class-1 label outweighs the class-0 label.

    The min-degree node of the dense class can have a larger degree than the
    max-degree node of the sparse one; those draws send everything to class 0
    near alpha = 1 and are skipped.
    """
    found = []
    for seed in range(SEED_SCAN_LIMIT):
        g, truth, labels = planted_instance(seed)
        weights = limit_class_weights(g, labels, 1.0).weights
        if weights[1] > weights[0]:
            found.append((g, truth, labels))
            if len(found) == INSTANCES:
                return found
    pytest.fail(f"only {len(found)} usable seeds below {SEED_SCAN_LIMIT}")


class TestLimitingBehaviour:
    @pytest.mark.parametrize("sigma", [1.0, 0.5])
    def test_second_class_takes_over(self, instances, sigma):
        hits = 0
        for g, _, labels in instances:
            pred = predict(g, labels, sigma, NEAR_ONE)
            hits += np.mean(pred == 1) >= 0.95
        assert hits >= 18

    def test_pagerank_keeps_first_class(self, instances):
        hits = 0
        for g, truth, labels in instances:
            pred = predict(g, labels, 0.0, NEAR_ONE)
            members = truth.members(0)
            hits += np.mean(pred[members] == 0) >= 0.30
        assert hits >= 18

    @pytest.mark.parametrize("sigma", [1.0, 0.5])
    def test_dominating_class_agrees(self, instances, sigma):
        checked = 0
        for g, _, labels in instances:
            limit = limit_class_weights(g, labels, sigma)
            if limit.dominating is None:
                continue
            checked += 1
            pred = predict(g, labels, sigma, NEAR_ONE)
            assert np.mean(pred == limit.dominating) >= 0.95
        assert checked > 0

    def test_heavier_first_label_takes_over(self):
        checked = 0
        for seed in range(INSTANCES):
            g, _, labels = planted_instance(seed)
            limit = limit_class_weights(g, labels, 1.0)
            if limit.dominating != 0:
                continue
            checked += 1
            assert np.mean(predict(g, labels, 1.0, NEAR_ONE) == 0) >= 0.95
        assert checked > 0

    def test_limit_weights_favour_high_degree_label(self, instances):
        g, _, labels = instances[0]
        assert limit_class_weights(g, labels, 1.0).dominating == 1
        assert limit_class_weights(g, labels, 0.5).dominating == 1
        # sigma = 0 weights are plain label counts
        pagerank = limit_class_weights(g, labels, 0.0)
        assert pagerank.dominating is None
        np.testing.assert_array_equal(pagerank.weights, [1.0, 1.0])


class TestLesMiserables:
    def test_pagerank_is_robust_near_one(self, lesmis):
        g, truth = lesmis
        spec = SweepSpec(sigmas=(0.0, 0.5, 1.0), alphas=(0.5, 0.99), trials=100, labels_per_class=1, seed=0)
        means = {(a.sigma, a.alpha): a.modularity_mean for a in random_label_trials(g, truth, spec).aggregates()}
        assert abs(means[(0.0, 0.99)] - means[(0.0, 0.5)]) <= 0.05
        assert means[(0.0, 0.99)] > means[(1.0, 0.99)]
        assert means[(0.0, 0.99)] > means[(0.5, 0.99)]

    def test_woman2_disagreement(self, lesmis):
        g, _ = lesmis
        labels = LabelSet(
            k=2,
            assignments={g.node_index("Valjean"): 0, g.node_index("Cosette"): 1},
            class_names=("Valjean", "Cosette"),
        )
        woman2 = g.node_index("Woman2")
        disagreeing = [
            alpha for alpha in settings.alpha_grid
            if predict(g, labels, 0.0, alpha)[woman2] == 1 and predict(g, labels, 1.0, alpha)[woman2] == 0
        ]
        assert disagreeing
