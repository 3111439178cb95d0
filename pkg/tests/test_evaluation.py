import csv
import io

import networkx as nx
import numpy as np
import pytest
from networkx.algorithms.community import modularity as nx_modularity

from evaluation.base import Partition, read_partition, write_partition, write_report_csv
from evaluation.modularity import modularity
from evaluation.scoring import score_against
from graphs.builders import from_matrix, from_networkx

LESMIS_MODULARITY_UNWEIGHTED = 0.549809349618699
LESMIS_MODULARITY_WEIGHTED = 0.488765615704937


def communities(p: Partition) -> list[set[int]]:
    return [set(p.members(c).tolist()) for c in range(p.k) if p.members(c).size]


class TestPartition:
    def test_sizes_members_empty(self):
        p = Partition(assignment=[0, 2, 0, 2], k=3)
        assert list(p.sizes()) == [2, 0, 2]
        assert list(p.members(2)) == [1, 3]
        assert p.empty_classes() == [1]

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            Partition(assignment=[0, 3], k=2)


class TestModularity:
    def test_single_cluster_is_zero(self, karate):
        assert modularity(karate, Partition(np.zeros(karate.n, dtype=int), k=1)) == pytest.approx(0.0, abs=1e-15)

    def test_two_triangles(self, two_triangles):
        p = Partition(assignment=[0, 0, 0, 1, 1, 1], k=2)
        assert modularity(two_triangles, p) == pytest.approx(0.5)

    def test_matches_networkx(self, karate):
        rng = np.random.default_rng(0)
        nxg = nx.karate_club_graph()
        for _ in range(20):
            p = Partition(rng.integers(0, 4, size=karate.n), k=4)
            expected = nx_modularity(nxg, communities(p), weight=None)
            assert modularity(karate, p) == pytest.approx(expected, abs=1e-12)

    def test_weighted_matches_networkx(self):
        nxg = nx.les_miserables_graph()
        g = from_networkx(nxg)
        p = Partition(np.arange(g.n) % 5, k=5)
        named = [{g.node_ids[i] for i in block} for block in communities(p)]
        expected = nx_modularity(nxg, named, weight="weight")
        assert modularity(g, p) == pytest.approx(expected, abs=1e-12)

    def test_permutation_and_scaling_invariant(self, karate):
        rng = np.random.default_rng(1)
        p = Partition(rng.integers(0, 3, size=karate.n), k=3)
        permuted = Partition(np.array([2, 0, 1])[p.assignment], k=3)
        scaled = from_matrix(3.5 * karate.to_dense())
        assert modularity(karate, permuted) == pytest.approx(modularity(karate, p), abs=1e-14)
        assert modularity(scaled, p) == pytest.approx(modularity(karate, p), abs=1e-14)

    def test_bounds(self, random_graphs):
        rng = np.random.default_rng(2)
        for g in random_graphs(20, seed=2):
            q = modularity(g, Partition(rng.integers(0, 3, size=g.n), k=3))
            assert -1.0 <= q <= 1.0

    def test_length_mismatch(self, karate):
        with pytest.raises(ValueError, match="nodes"):
            modularity(karate, Partition([0, 1], k=2))

    def test_lesmis_regression(self, lesmis, lesmis_weighted):
        g, truth = lesmis
        assert modularity(g, truth) == pytest.approx(LESMIS_MODULARITY_UNWEIGHTED, abs=1e-12)
        g, truth = lesmis_weighted
        assert modularity(g, truth) == pytest.approx(LESMIS_MODULARITY_WEIGHTED, abs=1e-12)


class TestScoring:
    def test_perfect(self):
        truth = Partition([0, 1, 1, 0], k=2)
        report = score_against(truth, truth)
        assert report.micro_precision == 1.0
        np.testing.assert_array_equal(report.confusion, np.diag([2, 2]))

    def test_constant_majority(self):
        truth = Partition([0] * 30 + [1] * 70, k=2)
        pred = Partition([1] * 100, k=2)
        report = score_against(pred, truth)
        assert report.micro_precision == pytest.approx(0.7)
        assert report.precision[0] == 0.0
        assert "class 0 has no predicted nodes" in report.flags
        assert not np.isnan(report.precision).any()

    def test_labeled_excluded_by_default(self):
        truth = Partition([0, 0, 1, 1], k=2)
        pred = Partition([0, 1, 1, 0], k=2)
        report = score_against(pred, truth, labeled=[0, 2])
        assert report.evaluated == 2
        assert report.micro_precision == 0.0

    def test_micro_is_trace_ratio(self):
        rng = np.random.default_rng(3)
        truth = Partition(rng.integers(0, 3, size=50), k=3)
        pred = Partition(rng.integers(0, 3, size=50), k=3)
        report = score_against(pred, truth)
        c = report.confusion
        assert c.sum() == 50
        assert report.micro_precision == pytest.approx(np.trace(c) / c.sum())
        assert report.macro_precision == pytest.approx(report.precision.mean())

    def test_class_count_mismatch(self):
        with pytest.raises(ValueError, match="Class count"):
            score_against(Partition([0, 1], k=2), Partition([0, 1], k=3))

    def test_modularity_attached(self, two_triangles):
        truth = Partition([0, 0, 0, 1, 1, 1], k=2)
        report = score_against(truth, truth, graph=two_triangles)
        assert report.modularity == pytest.approx(0.5)

    def test_report_rows(self):
        truth = Partition([0, 1, 1], k=2, class_names=("a", "b"))
        report = score_against(truth, truth, precision_mode="macro")
        out = io.StringIO()
        write_report_csv(report, stream=out)
        rows = list(csv.DictReader(io.StringIO(out.getvalue())))
        assert [r["class"] for r in rows] == ["a", "b", "all"]
        assert rows[-1]["precision_mode"] == "macro"
        assert rows[-1]["modularity"] == ""


class TestPartitionFiles:
    def test_round_trip(self, tmp_path, path3):
        p = Partition([1, 0, 1], k=2, class_names=("x", "y"))
        path = tmp_path / "p.txt"
        write_partition(p, path, path3.node_ids)
        back = read_partition(path, path3, class_names=["x", "y"])
        np.testing.assert_array_equal(back.assignment, p.assignment)

    def test_reads_scores_csv(self, tmp_path, path3):
        path = tmp_path / "scores.csv"
        path.write_text("node,label,score_0,score_1\n0,red,1,0\n1,blue,0,1\n2,red,1,0\n")
        p = read_partition(path, path3, class_names=["blue", "red"])
        assert list(p.assignment) == [1, 0, 1]

    def test_missing_node(self, tmp_path, path3):
        path = tmp_path / "p.txt"
        path.write_text("0 a\n1 b\n")
        with pytest.raises(ValueError, match="every node"):
            read_partition(path, path3)
