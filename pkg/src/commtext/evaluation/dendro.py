"""Parameter sweeps tracking how categories merge across scales."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..cda import truncate_partition
from ..cda.partition import LabeledPartition
from ..errors import ConfigError, DataError
from ..graph import Graph
from .runner import run_algorithm

__all__ = ["Dendrogram", "DendroLevel", "DendroCategory", "dendrogram_sweep"]


@dataclass
class DendroCategory:
    id: int
    share: float
    tracked: list[str]
    is_catch_all: bool
    parent: int | None = None       # category id at the next coarser level
    children: list[int] = field(default_factory=list)  # finer category ids


@dataclass
class DendroLevel:
    parameter: float | None
    categories: list[DendroCategory]
    m: int


@dataclass
class Dendrogram:
    algorithm: str
    n_cut: int
    tracked: list[str]
    levels: list[DendroLevel]       # ordered by the ascending parameter grid

    def tracked_category_counts(self) -> list[int]:
        """Distinct non-catch-all categories hit by tracked users, per level."""
        out = []
        for level in self.levels:
            cats = {
                c.id
                for c in level.categories
                if not c.is_catch_all and c.tracked
            }
            out.append(len(cats))
        return out

    def to_json(self) -> dict:
        """Nested tree, coarsest level at the root, finest at the leaf."""
        node: dict | None = None
        for level in self.levels:  # finest -> coarsest accumulation
            node = {
                "parameter": level.parameter,
                "m": level.m,
                "categories": [
                    {
                        "id": c.id,
                        "share": c.share,
                        "tracked": c.tracked,
                        "catch_all": c.is_catch_all,
                        "children": c.children,
                    }
                    for c in level.categories
                ],
                "children": [node] if node is not None else [],
            }
        return node if node is not None else {"parameter": None, "categories": [], "children": []}


def _level_from(lp: LabeledPartition, parameter: float | None,
                tracked: list[str]) -> DendroLevel:
    total = lp.category.size
    counts = np.bincount(lp.category, minlength=lp.n_cut + 1)
    categories = []
    for cat in range(1, lp.n_cut + 1):
        n = int(counts[cat])
        if n == 0 and cat != lp.catch_all:
            continue
        categories.append(DendroCategory(
            id=cat,
            share=n / total,
            tracked=[uid for uid in tracked if lp.category_of(uid) == cat],
            is_catch_all=cat == lp.catch_all,
        ))
    return DendroLevel(parameter=parameter, categories=categories, m=lp.base.m)


def _link_levels(fine: DendroLevel, coarse: DendroLevel,
                 fine_lp: LabeledPartition, coarse_lp: LabeledPartition) -> None:
    """Parent of a fine category = coarse category with maximal member
    overlap; ties go to the larger coarse category, then the smaller id."""
    coarse_sizes = np.bincount(coarse_lp.category, minlength=coarse_lp.n_cut + 1)
    by_id = {c.id: c for c in coarse.categories}
    for cat in fine.categories:
        members = fine_lp.category == cat.id
        if not members.any():
            continue
        overlap = np.bincount(coarse_lp.category[members], minlength=coarse_lp.n_cut + 1)
        best = None
        for coarse_id in range(1, coarse_lp.n_cut + 1):
            if coarse_id not in by_id:
                continue
            key = (int(overlap[coarse_id]), int(coarse_sizes[coarse_id]), -coarse_id)
            if best is None or key > best[0]:
                best = (key, coarse_id)
        if best is not None and best[0][0] > 0:
            cat.parent = best[1]
            by_id[best[1]].children.append(cat.id)


def dendrogram_sweep(g: Graph, algorithm: str, grid: list[float | None],
                     tracked: list[str], n_cut: int, seed: int = 0) -> Dendrogram:
    """Run the algorithm along an ascending grid and link categories."""
    if not grid:
        raise ConfigError("parameter grid must not be empty")
    params = [p for p in grid if p is not None]
    if params != sorted(params):
        raise ConfigError("parameter grid must be sorted ascending")
    for uid in tracked:
        if uid not in g.index:
            raise DataError(f"tracked user {uid!r} not in graph")

    levels: list[DendroLevel] = []
    lps: list[LabeledPartition] = []
    for parameter in grid:
        partition = run_algorithm(g, algorithm, parameter, seed)
        lp = truncate_partition(partition, n_cut)
        levels.append(_level_from(lp, parameter, tracked))
        lps.append(lp)
    for j in range(len(levels) - 1):
        _link_levels(levels[j], levels[j + 1], lps[j], lps[j + 1])
    return Dendrogram(algorithm=algorithm, n_cut=n_cut, tracked=list(tracked), levels=levels)
