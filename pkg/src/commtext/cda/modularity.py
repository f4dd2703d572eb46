"""Multi-scale modularity of a partition.

Q_c = sum_i [ w_ii / w  -  gamma * (w_i / 2w)^2 ]   with   gamma = 1/c,

so c = 1 is standard modularity and larger c favors coarser partitions.
"""

from __future__ import annotations

import numpy as np

from ..errors import ConfigError, DataError
from ..graph import Graph
from .partition import Partition

__all__ = ["modularity"]


def modularity(g: Graph, p: Partition, c: float = 1.0) -> float:
    if c <= 0:
        raise ConfigError(f"scale c must be positive, got {c}")
    if p.graph is not g and p.assignment.shape[0] != g.n_nodes:
        raise DataError("partition does not cover this graph")
    if p.m == 0 or np.bincount(p.assignment, minlength=p.m).min() == 0:
        raise DataError("partition has an empty module")
    w = g.total_weight
    if w <= 0:
        raise DataError("graph has no edge weight")
    gamma = 1.0 / c
    frac = p.module_strength / (2.0 * w)
    return float(np.sum(p.internal_weight) / w - gamma * np.sum(frac * frac))
