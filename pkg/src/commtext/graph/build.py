"""Weighted undirected interaction graph: parsing, symmetrization, filtering.

The graph is immutable after construction.  Node ids are opaque strings
externally; internally every node gets a dense integer index (assigned in
lexicographic id order, so outputs never depend on input line order).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from ..errors import DataError, ParseError

__all__ = ["DirectedEdgeBag", "Graph", "load_edge_list", "to_undirected_max", "filter_min_degree"]


@dataclass
class DirectedEdgeBag:
    """Multiset of directed weighted edges; duplicate (src, dst) weights are summed."""

    weights: dict[tuple[str, str], float] = field(default_factory=dict)
    nodes: set[str] = field(default_factory=set)

    def add(self, src: str, dst: str, weight: float) -> None:
        key = (src, dst)
        self.weights[key] = self.weights.get(key, 0.0) + float(weight)
        self.nodes.add(src)
        self.nodes.add(dst)

    def __len__(self) -> int:
        return len(self.weights)


def _split_fields(line: str) -> list[str]:
    if "\t" in line:
        return line.split("\t")
    return line.split(",")


def load_edge_list(stream: Iterable[str]) -> DirectedEdgeBag:
    """Parse a line-oriented edge list into a directed edge bag.

    Each non-comment line is ``src<TAB or ,>dst<TAB or ,>weight``.  Lines
    starting with ``#`` and blank lines are skipped.  Duplicate (src, dst)
    lines have their weights summed.

    Raises ParseError (with 1-based line number) on malformed lines or
    non-positive weights.
    """
    bag = DirectedEdgeBag()
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in _split_fields(line)]
        if len(fields) != 3:
            raise ParseError(f"expected 3 fields, got {len(fields)}: {line!r}", line=lineno)
        src, dst, wtext = fields
        if not src or not dst:
            raise ParseError(f"empty node id in {line!r}", line=lineno)
        try:
            weight = float(wtext)
        except ValueError:
            raise ParseError(f"bad weight {wtext!r}", line=lineno) from None
        if not np.isfinite(weight):
            raise ParseError(f"non-finite weight {wtext!r}", line=lineno)
        if weight <= 0:
            raise ParseError(f"weight must be positive, got {wtext}", line=lineno)
        bag.add(src, dst, weight)
    return bag


class Graph:
    """Weighted undirected graph without self-loops.

    Stored as a symmetric CSR adjacency over dense node indices.  ``w`` is
    the total edge weight (each undirected edge counted once); per-node
    strength is the sum of incident edge weights.
    """

    __slots__ = ("ids", "index", "indptr", "indices", "weights", "strength", "total_weight")

    def __init__(self, ids: list[str], edge_u: np.ndarray, edge_v: np.ndarray, edge_w: np.ndarray):
        self.ids: tuple[str, ...] = tuple(ids)
        self.index: dict[str, int] = {nid: i for i, nid in enumerate(ids)}
        if len(self.index) != len(ids):
            raise DataError("duplicate node ids")
        n = len(ids)
        if edge_u.size:
            if edge_u.min() < 0 or max(edge_u.max(), edge_v.max()) >= n:
                raise DataError("edge endpoint out of range")
            if np.any(edge_u == edge_v):
                raise DataError("self-loops are not allowed")
            if np.any(edge_w <= 0):
                raise DataError("edge weights must be positive")
        # Symmetric CSR: every undirected edge appears in both directions.
        both_u = np.concatenate([edge_u, edge_v])
        both_v = np.concatenate([edge_v, edge_u])
        both_w = np.concatenate([edge_w, edge_w])
        order = np.lexsort((both_v, both_u))
        both_u, both_v, both_w = both_u[order], both_v[order], both_w[order]
        self.indptr = np.zeros(n + 1, dtype=np.int64)
        np.add.at(self.indptr, both_u + 1, 1)
        np.cumsum(self.indptr, out=self.indptr)
        self.indices = both_v.astype(np.int64)
        self.weights = both_w.astype(np.float64)
        self.strength = np.zeros(n, dtype=np.float64)
        np.add.at(self.strength, both_u, both_w)
        self.total_weight = float(edge_w.sum())

    @property
    def n_nodes(self) -> int:
        return len(self.ids)

    @property
    def n_edges(self) -> int:
        return self.indices.size // 2

    def degree(self) -> np.ndarray:
        """Unweighted degree (number of incident edges) per node."""
        return np.diff(self.indptr)

    def edges(self) -> Iterator[tuple[int, int, float]]:
        """Yield each undirected edge once as (u, v, w) with u < v."""
        for u in range(self.n_nodes):
            for e in range(self.indptr[u], self.indptr[u + 1]):
                v = int(self.indices[e])
                if u < v:
                    yield u, v, float(self.weights[e])

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Vectorized (u, v, w) arrays with u < v, sorted by (u, v)."""
        rows = np.repeat(np.arange(self.n_nodes, dtype=np.int64), np.diff(self.indptr))
        mask = rows < self.indices
        return rows[mask], self.indices[mask], self.weights[mask]

    def neighbors(self, u: int) -> tuple[np.ndarray, np.ndarray]:
        lo, hi = self.indptr[u], self.indptr[u + 1]
        return self.indices[lo:hi], self.weights[lo:hi]

    def subgraph(self, keep: np.ndarray) -> "Graph":
        """Induced subgraph on a boolean node mask; ids are preserved."""
        keep = np.asarray(keep, dtype=bool)
        new_ids = [nid for i, nid in enumerate(self.ids) if keep[i]]
        remap = -np.ones(self.n_nodes, dtype=np.int64)
        remap[keep] = np.arange(len(new_ids))
        u, v, w = self.edge_arrays()
        mask = keep[u] & keep[v]
        return Graph(new_ids, remap[u[mask]], remap[v[mask]], w[mask])

    def connected_components(self) -> np.ndarray:
        """Component label per node (labels are ordered by smallest member index)."""
        labels = -np.ones(self.n_nodes, dtype=np.int64)
        current = 0
        for start in range(self.n_nodes):
            if labels[start] >= 0:
                continue
            stack = [start]
            labels[start] = current
            while stack:
                u = stack.pop()
                for v in self.indices[self.indptr[u]:self.indptr[u + 1]]:
                    v = int(v)
                    if labels[v] < 0:
                        labels[v] = current
                        stack.append(v)
            current += 1
        return labels


def to_undirected_max(bag: DirectedEdgeBag) -> Graph:
    """Symmetrize a directed edge bag: weight{u,v} = max over the two directions.

    Self-loops are dropped.  Every id mentioned in the bag becomes a node,
    even if its only edges were loops.
    """
    merged: dict[tuple[str, str], float] = {}
    for (src, dst), w in bag.weights.items():
        if src == dst:
            continue
        key = (src, dst) if src < dst else (dst, src)
        prev = merged.get(key)
        if prev is None or w > prev:
            merged[key] = w
    ids = sorted(bag.nodes)
    index = {nid: i for i, nid in enumerate(ids)}
    if merged:
        pairs = sorted(merged.items())
        edge_u = np.array([index[u] for (u, _), _ in pairs], dtype=np.int64)
        edge_v = np.array([index[v] for (_, v), _ in pairs], dtype=np.int64)
        edge_w = np.array([w for _, w in pairs], dtype=np.float64)
    else:
        edge_u = edge_v = np.zeros(0, dtype=np.int64)
        edge_w = np.zeros(0, dtype=np.float64)
    return Graph(ids, edge_u, edge_v, edge_w)


def filter_min_degree(g: Graph, k: int) -> Graph:
    """Iteratively peel nodes with (unweighted) degree < k until a fixed point.

    Returns the induced subgraph, which may be empty.
    """
    if k < 0:
        raise DataError(f"minimum degree must be >= 0, got {k}")
    if k == 0:
        return g
    degree = np.diff(g.indptr).copy()
    alive = np.ones(g.n_nodes, dtype=bool)
    queue = [u for u in range(g.n_nodes) if degree[u] < k]
    for u in queue:
        alive[u] = False
    while queue:
        u = queue.pop()
        for v in g.indices[g.indptr[u]:g.indptr[u + 1]]:
            v = int(v)
            if alive[v]:
                degree[v] -= 1
                if degree[v] < k:
                    alive[v] = False
                    queue.append(v)
    return g.subgraph(alive)
