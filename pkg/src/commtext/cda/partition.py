"""Partitions of a graph into communities, and the size-ranked truncation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ConfigError, DataError
from ..graph import Graph

__all__ = ["Partition", "LabeledPartition", "truncate_partition"]


class Partition:
    """Node-index -> community assignment with cached per-module weights.

    Community ids are dense integers 0..m-1 (no empty module), assigned in
    order of first appearance over the node index range.  ``internal_weight``
    (w_ii) is the total weight of edges inside each module; ``module_strength``
    (w_i) the summed node strengths, so sum(module_strength) == 2w.
    """

    __slots__ = ("graph", "assignment", "m", "internal_weight", "module_strength")

    def __init__(self, graph: Graph, assignment: np.ndarray):
        assignment = np.asarray(assignment)
        if assignment.shape != (graph.n_nodes,):
            raise DataError(
                f"assignment covers {assignment.shape[0] if assignment.ndim == 1 else '?'} nodes, "
                f"graph has {graph.n_nodes}"
            )
        self.graph = graph
        self.assignment = _dense_relabel(assignment.astype(np.int64))
        self.m = int(self.assignment.max()) + 1 if self.assignment.size else 0
        u, v, w = graph.edge_arrays()
        cu = self.assignment[u]
        cv = self.assignment[v]
        intra = cu == cv
        self.internal_weight = np.bincount(cu[intra], weights=w[intra], minlength=self.m)
        self.module_strength = np.bincount(self.assignment, weights=graph.strength, minlength=self.m)

    @classmethod
    def from_labels(cls, graph: Graph, labels) -> "Partition":
        return cls(graph, np.asarray(labels, dtype=np.int64))

    def sizes(self) -> np.ndarray:
        return np.bincount(self.assignment, minlength=self.m)

    def community_of(self, node_id: str) -> int:
        try:
            return int(self.assignment[self.graph.index[node_id]])
        except KeyError:
            raise DataError(f"unknown node id {node_id!r}") from None

    def members(self, community: int) -> np.ndarray:
        return np.flatnonzero(self.assignment == community)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and np.array_equal(self.assignment, other.assignment)

    def __repr__(self) -> str:
        return f"Partition(m={self.m}, n={self.graph.n_nodes})"


def _dense_relabel(labels: np.ndarray) -> np.ndarray:
    """Relabel to 0..m-1 by first appearance in node-index order."""
    out = np.empty_like(labels)
    mapping: dict[int, int] = {}
    for i, lab in enumerate(labels.tolist()):
        c = mapping.get(lab)
        if c is None:
            c = len(mapping)
            mapping[lab] = c
        out[i] = c
    return out


@dataclass(frozen=True)
class LabeledPartition:
    """Partition truncated to the N_cut-1 largest communities plus a catch-all.

    ``category`` maps node index -> 1..N_cut; categories 1..N_cut-1 are the
    largest communities in non-increasing size order, category N_cut is the
    catch-all holding everyone else.
    """

    base: Partition
    n_cut: int
    category: np.ndarray
    community_to_category: dict[int, int]

    @property
    def catch_all(self) -> int:
        return self.n_cut

    def category_of(self, node_id: str) -> int:
        try:
            return int(self.category[self.base.graph.index[node_id]])
        except KeyError:
            raise DataError(f"unknown node id {node_id!r}") from None

    def category_sizes(self) -> dict[int, int]:
        counts = np.bincount(self.category, minlength=self.n_cut + 1)
        return {cat: int(counts[cat]) for cat in range(1, self.n_cut + 1)}


def truncate_partition(p: Partition, n_cut: int) -> LabeledPartition:
    """Keep the n_cut-1 largest communities as categories; pool the rest.

    Communities are ranked by member count descending, ties broken by the
    smaller community id.  The catch-all category (n_cut) may be empty when
    the partition has fewer than n_cut communities.
    """
    if n_cut < 2:
        raise ConfigError(f"n_cut must be >= 2, got {n_cut}")
    sizes = p.sizes()
    ranked = sorted(range(p.m), key=lambda c: (-int(sizes[c]), c))
    kept = ranked[: n_cut - 1]
    mapping = {c: rank + 1 for rank, c in enumerate(kept)}
    category = np.full(p.graph.n_nodes, n_cut, dtype=np.int64)
    for c, cat in mapping.items():
        category[p.assignment == c] = cat
    return LabeledPartition(base=p, n_cut=n_cut, category=category, community_to_category=mapping)
