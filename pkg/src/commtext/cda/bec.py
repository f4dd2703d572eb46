"""Agglomerative clustering driven by the edge-classification F-score.

Precision is intra-cluster edge weight over intra-cluster node pairs,
recall intra-cluster edge weight over the total weight; the scale ``s``
weights recall against precision exactly like a beta in an F-score.  Each
edge is reviewed once, in descending weight order, and the clusters of its
endpoints merge iff the F-score does not decrease.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ConfigError, DataError
from ..graph import Graph
from .partition import Partition

__all__ = ["EdgeFScore", "edge_fscore", "bec", "bec_trace", "BecTrace"]


@dataclass(frozen=True)
class EdgeFScore:
    precision: float
    recall: float
    scale: float
    value: float


def _fscore(intra_weight: float, intra_pairs: float, total_weight: float, s2: float) -> tuple[float, float, float]:
    """(precision, recall, F_s) with the singleton and zero conventions."""
    precision = 1.0 if intra_pairs == 0 else intra_weight / intra_pairs
    recall = intra_weight / total_weight
    if precision == 0.0 and recall == 0.0:
        return precision, recall, 0.0
    denom = s2 * precision + recall
    if denom == 0.0:
        return precision, recall, 0.0
    return precision, recall, (1.0 + s2) * precision * recall / denom


def edge_fscore(g: Graph, p: Partition, s: float) -> EdgeFScore:
    """Edge-classification F-score of an existing partition."""
    if s <= 0:
        raise ConfigError(f"scale s must be positive, got {s}")
    if p.assignment.shape[0] != g.n_nodes:
        raise DataError("partition does not cover this graph")
    sizes = p.sizes().astype(np.float64)
    intra_pairs = float(np.sum(sizes * (sizes - 1.0) / 2.0))
    intra_weight = float(np.sum(p.internal_weight))
    precision, recall, value = _fscore(intra_weight, intra_pairs, g.total_weight, s * s)
    return EdgeFScore(precision=precision, recall=recall, scale=s, value=value)


@dataclass
class BecTrace:
    """Replayable record of one agglomeration run."""

    partition: Partition
    edge_visits: int
    accepted: int
    f_history: list[float]       # F after each accepted merge
    final: EdgeFScore


def bec_trace(g: Graph, s: float) -> BecTrace:
    if g.n_nodes == 0:
        raise DataError("bec on an empty graph")
    if s <= 0:
        raise ConfigError(f"scale s must be positive, got {s}")
    s2 = s * s
    w = g.total_weight
    n = g.n_nodes

    eu, ev, ew = g.edge_arrays()
    # Descending weight; ties by the smaller (u, v) index pair.
    order = sorted(range(eu.size), key=lambda i: (-ew[i], eu[i], ev[i]))

    parent = list(range(n))
    size = [1] * n
    # Cross-cluster weights, kept symmetric; merged small-into-large.
    neighbors: list[dict[int, float]] = [{} for _ in range(n)]
    for i in range(eu.size):
        u, v, wt = int(eu[i]), int(ev[i]), float(ew[i])
        neighbors[u][v] = neighbors[u].get(v, 0.0) + wt
        neighbors[v][u] = neighbors[v].get(u, 0.0) + wt

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    intra_weight = 0.0
    intra_pairs = 0.0
    current_f = _fscore(intra_weight, intra_pairs, w, s2)[2]
    f_history: list[float] = []
    visits = 0
    accepted = 0

    for i in order:
        visits += 1
        ru, rv = find(int(eu[i])), find(int(ev[i]))
        if ru == rv:
            continue
        cross = neighbors[ru].get(rv, 0.0)
        nu, nv = size[ru], size[rv]
        new_weight = intra_weight + cross
        new_pairs = intra_pairs - nu * (nu - 1) / 2.0 - nv * (nv - 1) / 2.0 \
            + (nu + nv) * (nu + nv - 1) / 2.0
        new_f = _fscore(new_weight, new_pairs, w, s2)[2]
        if new_f < current_f:
            continue
        # Accept: merge the smaller cluster into the larger.
        if size[ru] < size[rv]:
            ru, rv = rv, ru
        small, big = rv, ru
        parent[small] = big
        size[big] += size[small]
        nb_small = neighbors[small]
        nb_big = neighbors[big]
        nb_big.pop(small, None)
        for other, wt in nb_small.items():
            if other == big:
                continue
            nb_big[other] = nb_big.get(other, 0.0) + wt
            nb_other = neighbors[other]
            nb_other[big] = nb_other.get(big, 0.0) + wt
            del nb_other[small]
        nb_small.clear()
        intra_weight = new_weight
        intra_pairs = new_pairs
        current_f = new_f
        accepted += 1
        f_history.append(current_f)

    labels = np.fromiter((find(i) for i in range(n)), dtype=np.int64, count=n)
    partition = Partition.from_labels(g, labels)
    precision, recall, value = _fscore(intra_weight, intra_pairs, w, s2)
    return BecTrace(
        partition=partition,
        edge_visits=visits,
        accepted=accepted,
        f_history=f_history,
        final=EdgeFScore(precision=precision, recall=recall, scale=s, value=value),
    )


def bec(g: Graph, s: float, seed: int = 0) -> Partition:
    """Edge-order agglomeration; the order is deterministic, so ``seed`` is
    accepted only for interface uniformity with the other optimizers."""
    return bec_trace(g, s).partition
