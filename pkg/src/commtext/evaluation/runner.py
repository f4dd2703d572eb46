"""Dispatch community-detection runs by algorithm name."""

from __future__ import annotations

from ..cda import bec, infomap, louvain, map_equation, modularity
from ..cda.bec import edge_fscore
from ..cda.partition import Partition
from ..errors import ConfigError
from ..graph import Graph

__all__ = ["ALGORITHMS", "run_algorithm", "quality_of"]

ALGORITHMS = ("louvain", "bec", "infomap")


def run_algorithm(g: Graph, name: str, parameter: float | None, seed: int) -> Partition:
    if name == "louvain":
        if parameter is None:
            raise ConfigError("louvain needs a scale parameter c")
        return louvain(g, c=parameter, seed=seed)
    if name == "bec":
        if parameter is None:
            raise ConfigError("bec needs a scale parameter s")
        return bec(g, s=parameter, seed=seed)
    if name == "infomap":
        return infomap(g, seed=seed)
    raise ConfigError(f"unknown algorithm {name!r}; supported: {', '.join(ALGORITHMS)}")


def quality_of(g: Graph, p: Partition, name: str, parameter: float | None) -> float:
    """Objective value for the sweep manifest: Q_c, F_s, or L."""
    if name == "louvain":
        return modularity(g, p, parameter if parameter is not None else 1.0)
    if name == "bec":
        return edge_fscore(g, p, parameter if parameter is not None else 1.0).value
    if name == "infomap":
        return map_equation(g, p).bits_per_step
    raise ConfigError(f"unknown algorithm {name!r}; supported: {', '.join(ALGORITHMS)}")
