"""The compiled and pure kernels must produce identical partitions."""

import numpy as np
import pytest

from commtext._kernels import available_backends
from commtext.cda import infomap, louvain

from helpers import random_connected_graph, ring_of_cliques

backends = available_backends()
needs_both = pytest.mark.skipif(
    "speed" not in backends, reason="compiled kernel not built"
)


@needs_both
class TestBackendParity:
    def test_louvain_identical_partitions(self):
        rng = np.random.default_rng(55)
        graphs = [ring_of_cliques(6, 4)]
        graphs += [random_connected_graph(int(rng.integers(5, 60)), rng) for _ in range(10)]
        for g in graphs:
            for c in (0.5, 1.0, 4.0):
                pure = louvain(g, c, seed=3, kernel=backends["pure"])
                fast = louvain(g, c, seed=3, kernel=backends["speed"])
                assert np.array_equal(pure.assignment, fast.assignment)

    def test_infomap_identical_partitions(self):
        rng = np.random.default_rng(66)
        graphs = [ring_of_cliques(5, 5)]
        graphs += [random_connected_graph(int(rng.integers(5, 60)), rng) for _ in range(10)]
        for g in graphs:
            pure = infomap(g, seed=4, kernel=backends["pure"])
            fast = infomap(g, seed=4, kernel=backends["speed"])
            assert np.array_equal(pure.assignment, fast.assignment)
