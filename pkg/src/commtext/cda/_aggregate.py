"""Shared level machinery for the greedy optimizers.

During aggregation phases the working graph carries self-loops (community
internal weight folds into a loop on the supernode), even though public
graphs forbid them.  ``LevelGraph`` is that internal representation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from ..graph import Graph


@dataclass
class LevelGraph:
    """CSR adjacency over supernodes; loops kept out of the CSR arrays.

    ``strength`` counts each loop twice, so sum(strength) == 2w holds at
    every level with w the original total weight.
    """

    indptr: np.ndarray
    indices: np.ndarray
    weights: np.ndarray
    loops: np.ndarray
    strength: np.ndarray

    @property
    def n(self) -> int:
        return self.loops.size

    @classmethod
    def from_graph(cls, g: Graph) -> "LevelGraph":
        return cls(
            indptr=g.indptr.astype(np.int64),
            indices=g.indices.astype(np.int64),
            weights=g.weights.astype(np.float64),
            loops=np.zeros(g.n_nodes, dtype=np.float64),
            strength=g.strength.astype(np.float64),
        )


def dense_level_labels(node_comm: np.ndarray) -> tuple[np.ndarray, int]:
    """Relabel community ids to 0..m-1 by first appearance in index order."""
    labels = np.empty_like(node_comm)
    mapping: dict[int, int] = {}
    for i, c in enumerate(node_comm.tolist()):
        d = mapping.get(c)
        if d is None:
            d = len(mapping)
            mapping[c] = d
        labels[i] = d
    return labels, len(mapping)


def aggregate(level: LevelGraph, labels: np.ndarray, m: int) -> LevelGraph:
    """Collapse communities into supernodes, folding intra weight into loops."""
    n = level.n
    rows = np.repeat(np.arange(n, dtype=np.int64), np.diff(level.indptr))
    cu = labels[rows]
    cv = labels[level.indices]
    intra = cu == cv
    # Each intra edge appears twice in the symmetric CSR; halving is exact.
    loops = np.bincount(labels, weights=level.loops, minlength=m)
    loops += 0.5 * np.bincount(cu[intra], weights=level.weights[intra], minlength=m)
    strength = np.bincount(labels, weights=level.strength, minlength=m)
    cross = sp.coo_matrix(
        (level.weights[~intra], (cu[~intra], cv[~intra])), shape=(m, m)
    ).tocsr()
    cross.sum_duplicates()
    return LevelGraph(
        indptr=cross.indptr.astype(np.int64),
        indices=cross.indices.astype(np.int64),
        weights=cross.data.astype(np.float64),
        loops=loops,
        strength=strength,
    )
