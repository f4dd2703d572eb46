"""Shared graph builders for the test suite."""

from __future__ import annotations

import numpy as np

from commtext.graph import Graph


def graph_from_edges(edges, extra_nodes=()) -> Graph:
    """Build a Graph from (u_id, v_id, weight) triples with string ids."""
    ids = sorted({u for u, _, _ in edges} | {v for _, v, _ in edges} | set(extra_nodes))
    index = {nid: i for i, nid in enumerate(ids)}
    eu = np.array([index[u] for u, _, _ in edges], dtype=np.int64)
    ev = np.array([index[v] for _, v, _ in edges], dtype=np.int64)
    ew = np.array([float(w) for _, _, w in edges], dtype=np.float64)
    return Graph(ids, eu, ev, ew)


def clique(ids) -> list[tuple[str, str, float]]:
    out = []
    ids = list(ids)
    for i in range(len(ids)):
        for j in range(i + 1, len(ids)):
            out.append((ids[i], ids[j], 1.0))
    return out


def two_triangles_with_bridge() -> Graph:
    """Two unit triangles {a,b,c} and {d,e,f} joined by the bridge c-d."""
    edges = clique(["a", "b", "c"]) + clique(["d", "e", "f"]) + [("c", "d", 1.0)]
    return graph_from_edges(edges)


def ring_of_cliques(n_cliques: int, clique_size: int) -> Graph:
    """Cliques joined into a ring by single unit bridges."""
    edges = []
    for c in range(n_cliques):
        members = [f"c{c:02d}n{i}" for i in range(clique_size)]
        edges.extend(clique(members))
    for c in range(n_cliques):
        nxt = (c + 1) % n_cliques
        edges.append((f"c{c:02d}n0", f"c{nxt:02d}n1", 1.0))
    return graph_from_edges(edges)


def random_connected_graph(n: int, rng: np.random.Generator,
                           extra_edge_factor: float = 1.0) -> Graph:
    """Random spanning tree plus extra random edges; weights in [0.5, 3)."""
    ids = [f"n{i:03d}" for i in range(n)]
    order = rng.permutation(n)
    edges = set()
    for pos in range(1, n):
        u = int(order[pos])
        v = int(order[int(rng.integers(0, pos))])
        edges.add((min(u, v), max(u, v)))
    n_extra = int(extra_edge_factor * n)
    for _ in range(n_extra):
        u = int(rng.integers(0, n))
        v = int(rng.integers(0, n))
        if u != v:
            edges.add((min(u, v), max(u, v)))
    pairs = sorted(edges)
    eu = np.array([u for u, _ in pairs], dtype=np.int64)
    ev = np.array([v for _, v in pairs], dtype=np.int64)
    ew = 0.5 + 2.5 * rng.random(len(pairs))
    return Graph(ids, eu, ev, ew)
