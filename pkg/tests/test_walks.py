import numpy as np
import pytest

from graphs.builders import from_edge_list, from_matrix
from learning.base import LabelNormalization, LabelSet
from walks.diagnostics import diagnose, expected_visits, stationary_distribution, transition_matrix
from walks.limits import limit_class_weights
from walks.monte_carlo import monte_carlo_visits


class TestStationary:
    def test_path(self, path3):
        np.testing.assert_allclose(stationary_distribution(path3), [0.25, 0.5, 0.25])

    def test_regular_graph_uniform(self):
        ring = from_edge_list([(i, (i + 1) % 6) for i in range(6)])
        np.testing.assert_allclose(stationary_distribution(ring), np.full(6, 1 / 6))

    def test_invariant_on_lesmis(self, lesmis_weighted):
        g, _ = lesmis_weighted
        pi = stationary_distribution(g)
        assert pi.sum() == pytest.approx(1.0, abs=1e-12)
        np.testing.assert_allclose(transition_matrix(g).T @ pi, pi, atol=1e-10)

    def test_disconnected_rejected(self, two_triangles):
        with pytest.raises(ValueError, match="disconnected"):
            stationary_distribution(two_triangles)

    def test_isolated_rejected(self):
        g = from_edge_list([("a", "b")], nodes=["z"])
        with pytest.raises(ValueError, match="isolated"):
            stationary_distribution(g)


class TestExpectedVisits:
    def test_single_edge(self, single_edge):
        visits = expected_visits(single_edge, 0.5)
        np.testing.assert_allclose(visits, (4 / 3) * np.array([[1.0, 0.5], [0.5, 1.0]]))

    def test_small_alpha_is_identity(self, karate):
        np.testing.assert_allclose(expected_visits(karate, 1e-9), np.eye(karate.n), atol=1e-8)

    def test_row_sums(self, karate):
        for alpha in (0.3, 0.9):
            np.testing.assert_allclose(expected_visits(karate, alpha).sum(axis=1), 1 / (1 - alpha), rtol=1e-9)

    def test_rank_one_limit(self):
        complete = from_matrix(np.ones((10, 10)) - np.eye(10))
        alpha = 0.999
        scaled = (1 - alpha) * expected_visits(complete, alpha)
        pi = stationary_distribution(complete)
        np.testing.assert_allclose(scaled, np.tile(pi, (complete.n, 1)), rtol=0.02)

    def test_cap(self, karate):
        with pytest.raises(ValueError, match="monte_carlo_visits"):
            expected_visits(karate, 0.5, dense_cap=10)

    def test_diagnose(self, karate):
        diag = diagnose(karate, 0.5, with_visits=True)
        assert diag.visits.shape == (karate.n, karate.n)
        assert diag.stationary.sum() == pytest.approx(1.0)
        assert diagnose(karate, 0.5).visits is None


class TestMonteCarlo:
    def test_single_edge(self, single_edge):
        est = monte_carlo_visits(single_edge, 0, 0.5, walks=100_000, seed=1)
        np.testing.assert_allclose(est, [4 / 3, 2 / 3], rtol=0.05)
        assert est.sum() == pytest.approx(2.0, rel=0.02)

    def test_deterministic(self, karate):
        a = monte_carlo_visits(karate, 3, 0.8, walks=1, seed=42)
        b = monte_carlo_visits(karate, 3, 0.8, walks=1, seed=42)
        np.testing.assert_array_equal(a, b)

    def test_independent_of_workers(self, karate):
        a = monte_carlo_visits(karate, 0, 0.7, walks=5000, seed=3, block_size=500, max_workers=1)
        b = monte_carlo_visits(karate, 0, 0.7, walks=5000, seed=3, block_size=500, max_workers=4)
        np.testing.assert_array_equal(a, b)

    def test_bad_start(self, karate):
        with pytest.raises(ValueError, match="out of range"):
            monte_carlo_visits(karate, karate.n, 0.5, walks=10, seed=0)

    @pytest.mark.slow
    def test_matches_expected_visits(self, random_graphs):
        for g in random_graphs(10, max_n=30, seed=11):
            alpha = 0.5
            exact = expected_visits(g, alpha)[0]
            est = monte_carlo_visits(g, 0, alpha, walks=100_000, seed=5)
            big = exact >= 0.05
            np.testing.assert_allclose(est[big], exact[big], rtol=0.05)


class TestLimitWeights:
    def test_equal_degrees_tie(self, single_edge):
        limit = limit_class_weights(single_edge, LabelSet(k=2, assignments={0: 0, 1: 1}), sigma=1.0)
        np.testing.assert_allclose(limit.weights, [1.0, 1.0])
        assert limit.dominating is None

    def test_degree_power(self):
        # star: center degree 3, leaves degree 1
        star = from_edge_list([("c", "a"), ("c", "b"), ("c", "d")])
        labels = LabelSet(k=2, assignments={0: 0, 1: 1})
        limit = limit_class_weights(star, labels, sigma=1.0)
        np.testing.assert_allclose(limit.weights, [3.0, 1.0])
        assert limit.dominating == 0
        assert limit.margin == pytest.approx(2 / 3)
        assert limit_class_weights(star, labels, sigma=0.0).dominating is None

    def test_per_class_labels(self):
        star = from_edge_list([("c", "a"), ("c", "b"), ("c", "d")])
        labels = LabelSet(k=2, assignments={0: 0, 1: 1, 2: 1}, normalization=LabelNormalization.PER_CLASS)
        limit = limit_class_weights(star, labels, sigma=0.0)
        np.testing.assert_allclose(limit.weights, [1.0, 1.0])
        assert limit.dominating is None

    def test_missing_class(self, path3):
        with pytest.raises(ValueError, match="no labeled node"):
            limit_class_weights(path3, LabelSet(k=2, assignments={0: 0}), sigma=1.0)
