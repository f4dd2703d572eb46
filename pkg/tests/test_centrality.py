import math

import numpy as np
import pytest

from commtext.errors import ConfigError, DataError
from commtext.graph import Graph, eigencentrality, quantile_split
from commtext.graph.centrality import CentralityScores

from helpers import clique, graph_from_edges, random_connected_graph


class TestEigencentrality:
    def test_single_edge_symmetry(self):
        g = graph_from_edges([("a", "b", 1.0)])
        cs = eigencentrality(g)
        assert cs.converged
        assert cs.scores == pytest.approx([1 / math.sqrt(2)] * 2, abs=1e-9)

    def test_star_center_and_leaves(self):
        edges = [("center", f"leaf{i}", 1.0) for i in range(4)]
        g = graph_from_edges(edges)
        cs = eigencentrality(g, tol=1e-13, max_iter=50000)
        scores = {nid: s for nid, s in zip(cs.node_ids, cs.scores)}
        assert scores["center"] == pytest.approx(1 / math.sqrt(2), abs=1e-6)
        for i in range(4):
            assert scores[f"leaf{i}"] == pytest.approx(1 / (2 * math.sqrt(2)), abs=1e-6)

    def test_cycle_all_equal(self):
        for n in (3, 5, 8):
            edges = [(f"v{i}", f"v{(i + 1) % n}", 1.0) for i in range(n)]
            g = graph_from_edges(edges)
            cs = eigencentrality(g)
            assert np.allclose(cs.scores, cs.scores[0], atol=1e-8)

    def test_unit_norm_and_nonnegative(self):
        rng = np.random.default_rng(5)
        for _ in range(5):
            g = random_connected_graph(int(rng.integers(3, 30)), rng)
            cs = eigencentrality(g, tol=1e-12, max_iter=20000)
            assert np.linalg.norm(cs.scores) == pytest.approx(1.0, abs=1e-12)
            assert (cs.scores >= 0).all()

    def test_matches_dense_eigensolver(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            g = random_connected_graph(int(rng.integers(3, 40)), rng)
            cs = eigencentrality(g, tol=1e-13, max_iter=100000)
            assert cs.converged
            a = np.zeros((g.n_nodes, g.n_nodes))
            for u, v, w in g.edges():
                a[u, v] = a[v, u] = w
            vals, vecs = np.linalg.eigh(a)
            lead = vecs[:, int(np.argmax(vals))]
            cos = abs(float(np.dot(lead, cs.scores)))
            assert cos >= 1 - 1e-8

    def test_empty_graph_error(self):
        g = Graph([], np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64), np.zeros(0))
        with pytest.raises(DataError):
            eigencentrality(g)

    def test_bad_tolerance(self):
        g = graph_from_edges([("a", "b", 1.0)])
        with pytest.raises(ConfigError):
            eigencentrality(g, tol=0.0)
        with pytest.raises(ConfigError):
            eigencentrality(g, max_iter=0)

    def test_max_iter_sets_flag(self):
        g = graph_from_edges(clique(["a", "b", "c", "d"]) + [("d", "e", 1.0)])
        cs = eigencentrality(g, tol=1e-15, max_iter=2)
        assert not cs.converged
        assert cs.iterations_used == 2


class TestQuantileSplit:
    def _scores(self, values):
        ids = tuple(f"u{i:03d}" for i in range(len(values)))
        arr = np.asarray(values, dtype=float)
        arr = arr / np.linalg.norm(arr)
        return CentralityScores(node_ids=ids, scores=arr, iterations_used=1, converged=True)

    def test_100_distinct_gives_25_anchors(self):
        cs = self._scores(np.arange(1, 101))
        split = quantile_split(cs, 0.75)
        assert len(split.anchors) == 25
        assert len(split.tested) == 75

    def test_all_equal_gives_zero_anchors(self):
        cs = self._scores(np.ones(40))
        split = quantile_split(cs, 0.75)
        assert len(split.anchors) == 0
        assert len(split.tested) == 40

    def test_exact_partition(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            values = rng.random(int(rng.integers(2, 60))) + 0.01
            cs = self._scores(values)
            q = float(rng.uniform(0.05, 0.95))
            split = quantile_split(cs, q)
            assert split.anchors | split.tested == set(cs.node_ids)
            assert not (split.anchors & split.tested)

    def test_anchor_scores_dominate(self):
        rng = np.random.default_rng(9)
        values = rng.random(50) + 0.01
        cs = self._scores(values)
        split = quantile_split(cs, 0.6)
        by_id = dict(zip(cs.node_ids, cs.scores))
        if split.anchors:
            lowest_anchor = min(by_id[a] for a in split.anchors)
            highest_tested = max(by_id[t] for t in split.tested)
            assert lowest_anchor > split.threshold >= 0
            assert lowest_anchor >= highest_tested or highest_tested <= split.threshold

    def test_bad_quantile(self):
        cs = self._scores(np.arange(1, 5))
        for q in (0.0, 1.0, -0.2, 1.5):
            with pytest.raises(ConfigError):
                quantile_split(cs, q)
