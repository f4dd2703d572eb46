"""Greedy minimization of the two-level description length.

Same local-move/aggregation scheme as the modularity optimizer, driven by
the map-equation objective.  Runs on the largest connected component;
nodes outside it become singleton modules (with a warning).
"""

from __future__ import annotations

import warnings

import numpy as np

from .. import _kernels
from ..errors import DataError
from ..graph import Graph
from ._aggregate import LevelGraph, aggregate, dense_level_labels
from .mapeq import largest_component_mask, map_equation
from .partition import Partition

__all__ = ["infomap"]


def infomap(g: Graph, seed: int = 0, kernel=None) -> Partition:
    """Partition minimizing L greedily; deterministic given (g, seed)."""
    if g.n_nodes == 0:
        raise DataError("infomap on an empty graph")
    comps = g.connected_components()
    if comps.size and comps.max() > 0:
        warnings.warn(
            "graph is disconnected; infomap optimizes the largest component, "
            "remaining nodes become singleton modules",
            stacklevel=2,
        )
        mask = largest_component_mask(g)
        sub = g.subgraph(mask)
        sub_part = infomap(sub, seed=seed, kernel=kernel)
        labels = np.full(g.n_nodes, -1, dtype=np.int64)
        labels[mask] = sub_part.assignment
        offset = sub_part.m
        for i in np.flatnonzero(~mask):
            labels[i] = offset
            offset += 1
        return Partition.from_labels(g, labels)

    kern = kernel if kernel is not None else _kernels.selected_kernel()
    inv_two_w = 1.0 / (2.0 * g.total_weight) if g.total_weight > 0 else 0.0
    if g.n_edges == 0:
        return Partition.from_labels(g, np.zeros(g.n_nodes, dtype=np.int64))
    rng = np.random.default_rng(seed)

    level = LevelGraph.from_graph(g)
    flat = np.arange(g.n_nodes, dtype=np.int64)

    while True:
        n = level.n
        p_node = level.strength * inv_two_w
        ext_strength = level.strength - 2.0 * level.loops
        node_comm = np.arange(n, dtype=np.int64)
        comm_cut = ext_strength.copy()
        comm_p = p_node.copy()
        order = rng.permutation(n).astype(np.int64)

        total_moves = 0
        while True:
            # Refresh the running total each sweep so incremental drift
            # cannot accumulate across sweeps.
            qtot_raw = float(np.sum(comm_cut))
            moves = kern.infomap_sweep(
                level.indptr, level.indices, level.weights, ext_strength,
                p_node, order, node_comm, comm_cut, comm_p, inv_two_w, qtot_raw,
            )
            total_moves += moves
            if moves == 0:
                break
        if total_moves == 0:
            break
        labels, m = dense_level_labels(node_comm)
        flat = labels[flat]
        if m == n:
            break
        level = aggregate(level, labels, m)

    result = Partition.from_labels(g, flat)
    # Contract guards against greedy dead ends on degenerate graphs.
    one = Partition.from_labels(g, np.zeros(g.n_nodes, dtype=np.int64))
    l_result = map_equation(g, result).bits_per_step
    if map_equation(g, one).bits_per_step < l_result:
        return one
    return result
