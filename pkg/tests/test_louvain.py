import numpy as np
import pytest

from commtext.cda import Partition, louvain, modularity

from helpers import clique, graph_from_edges, random_connected_graph, ring_of_cliques

RING_ANALYTIC_Q = 8 * (10 / 88 - (22 / 176) ** 2)


class TestLouvain:
    def test_single_clique_one_community(self):
        g = graph_from_edges(clique([f"k{i}" for i in range(5)]))
        p = louvain(g, 1.0, seed=0)
        assert p.m == 1

    def test_ring_of_cliques_recovers_cliques(self):
        g = ring_of_cliques(8, 5)
        p = louvain(g, 1.0, seed=0)
        assert p.m == 8
        # Every clique maps to exactly one community.
        for c in range(8):
            members = {p.assignment[g.index[f"c{c:02d}n{i}"]] for i in range(5)}
            assert len(members) == 1
        q = modularity(g, p, 1.0)
        assert q == pytest.approx(RING_ANALYTIC_Q, abs=1e-9)

    def test_ring_partition_is_local_optimum(self):
        # Exhaustive single-node perturbations cannot improve the result.
        g = ring_of_cliques(8, 5)
        p = louvain(g, 1.0, seed=0)
        base = modularity(g, p, 1.0)
        labels = p.assignment.copy()
        for node in range(g.n_nodes):
            original = labels[node]
            for target in range(p.m + 1):  # +1 probes an isolated move
                if target == original:
                    continue
                labels[node] = target
                perturbed = modularity(g, Partition.from_labels(g, labels), 1.0)
                assert perturbed <= base + 1e-12
            labels[node] = original

    def test_large_scale_coarsens(self):
        g = ring_of_cliques(8, 5)
        m_fine = louvain(g, 1.0, seed=0).m
        m_coarse = louvain(g, 100.0, seed=0).m
        assert m_coarse < m_fine

    def test_beats_trivial_partitions(self):
        rng = np.random.default_rng(31)
        for _ in range(10):
            n = int(rng.integers(3, 30))
            g = random_connected_graph(n, rng)
            for c in (0.5, 1.0, 4.0):
                p = louvain(g, c, seed=7)
                q = modularity(g, p, c)
                q_one = modularity(g, Partition.from_labels(g, np.zeros(n, dtype=int)), c)
                q_single = modularity(g, Partition.from_labels(g, np.arange(n)), c)
                assert q >= q_one - 1e-12
                assert q >= q_single - 1e-12

    def test_deterministic_given_seed(self):
        g = ring_of_cliques(4, 4)
        p1 = louvain(g, 1.0, seed=42)
        p2 = louvain(g, 1.0, seed=42)
        assert np.array_equal(p1.assignment, p2.assignment)

    def test_sweep_never_decreases_quality(self):
        # Single kernel sweeps must only raise Q (phase monotonicity).
        from commtext._kernels import selected_kernel

        kern = selected_kernel()
        rng = np.random.default_rng(91)
        for _ in range(6):
            g = random_connected_graph(int(rng.integers(5, 40)), rng)
            n = g.n_nodes
            node_comm = np.arange(n, dtype=np.int64)
            comm_strength = g.strength.copy()
            q_prev = modularity(g, Partition.from_labels(g, node_comm), 1.0)
            for _ in range(4):
                order = rng.permutation(n).astype(np.int64)
                kern.louvain_sweep(
                    g.indptr.astype(np.int64), g.indices.astype(np.int64),
                    g.weights, g.strength, order, node_comm, comm_strength,
                    1.0, 2.0 * g.total_weight,
                )
                q_now = modularity(g, Partition.from_labels(g, node_comm), 1.0)
                assert q_now >= q_prev - 1e-12
                q_prev = q_now

    def test_partition_invariants(self):
        rng = np.random.default_rng(13)
        g = random_connected_graph(25, rng)
        p = louvain(g, 1.0, seed=3)
        sizes = p.sizes()
        assert sizes.min() >= 1
        assert p.assignment.min() == 0 and p.assignment.max() == p.m - 1
        assert float(p.internal_weight.sum()) <= g.total_weight + 1e-9
        assert float(p.module_strength.sum()) == pytest.approx(2 * g.total_weight, rel=1e-12)
