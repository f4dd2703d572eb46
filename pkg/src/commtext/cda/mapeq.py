"""Two-level description length of a random walk under a partition.

L(M) = q_switch * H(switch) + sum_i p_circ_i * H(module_i)

with strength-proportional stationary visit rates and no teleportation,
valid on connected undirected graphs.  Disconnected input is restricted to
its largest component (with a warning) unless strict mode is on.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import log2

import numpy as np

from ..errors import DataError
from ..graph import Graph
from .partition import Partition

__all__ = ["MapEquationTerms", "map_equation"]


@dataclass(frozen=True)
class MapEquationTerms:
    """Pieces of the description length, entropies in bits."""

    q_switch: float
    module_exit: np.ndarray      # q_i, per module
    module_circ: np.ndarray      # p_i with a circle: intra fraction + exit
    h_switch: float              # H(Q)
    h_modules: np.ndarray        # H(P^i), per module
    bits_per_step: float         # L
    m: int


def _entropy_term(p: float) -> float:
    return -p * log2(p) if p > 0.0 else 0.0


def largest_component_mask(g: Graph) -> np.ndarray:
    comps = g.connected_components()
    counts = np.bincount(comps)
    # Ties broken toward the smaller label, i.e. the earliest component.
    return comps == int(np.argmax(counts))


def map_equation(g: Graph, p: Partition, strict: bool = False) -> MapEquationTerms:
    if g.n_nodes == 0:
        raise DataError("map equation of an empty graph")
    if p.assignment.shape[0] != g.n_nodes:
        raise DataError("partition does not cover this graph")
    comps = g.connected_components()
    if comps.size and comps.max() > 0:
        if strict:
            raise DataError("graph is disconnected (strict mode)")
        warnings.warn(
            "graph is disconnected; map equation restricted to the largest component",
            stacklevel=2,
        )
        mask = largest_component_mask(g)
        sub = g.subgraph(mask)
        subp = Partition.from_labels(sub, p.assignment[mask])
        return map_equation(sub, subp, strict=False)

    w = g.total_weight
    if w <= 0:
        raise DataError("graph has no edge weight")
    two_w = 2.0 * w
    visit = g.strength / two_w
    m = p.m

    cut = np.zeros(m, dtype=np.float64)
    u, v, wts = g.edge_arrays()
    cu = p.assignment[u]
    cv = p.assignment[v]
    inter = cu != cv
    np.add.at(cut, cu[inter], wts[inter])
    np.add.at(cut, cv[inter], wts[inter])
    module_exit = cut / two_w
    q_switch = float(module_exit.sum())
    module_visit = np.bincount(p.assignment, weights=visit, minlength=m)
    module_circ = module_exit + module_visit

    if q_switch > 0.0:
        h_switch = sum(_entropy_term(float(q) / q_switch) for q in module_exit)
    else:
        h_switch = 0.0

    h_modules = np.zeros(m, dtype=np.float64)
    for i in range(m):
        circ = float(module_circ[i])
        if circ <= 0.0:
            continue
        h = _entropy_term(float(module_exit[i]) / circ)
        for alpha in np.flatnonzero(p.assignment == i):
            h += _entropy_term(float(visit[alpha]) / circ)
        h_modules[i] = h

    bits = q_switch * h_switch + float(np.sum(module_circ * h_modules))
    return MapEquationTerms(
        q_switch=q_switch,
        module_exit=module_exit,
        module_circ=module_circ,
        h_switch=h_switch,
        h_modules=h_modules,
        bits_per_step=bits,
        m=m,
    )
