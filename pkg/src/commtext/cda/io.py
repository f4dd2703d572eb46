"""CSV formats for partitions and labeled partitions."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from ..errors import ParseError
from ..graph import Graph
from .partition import LabeledPartition, Partition


def partition_csv_text(p: Partition) -> str:
    lines = ["node_id,community_id\n"]
    ids = p.graph.ids
    for i, c in enumerate(p.assignment.tolist()):
        lines.append(f"{ids[i]},{c}\n")
    return "".join(lines)


def write_partition(p: Partition, path: str | Path) -> None:
    Path(path).write_text(partition_csv_text(p), encoding="utf-8")


def read_partition(g: Graph, path: str | Path) -> Partition:
    labels = np.full(g.n_nodes, -1, dtype=np.int64)
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#") or line == "node_id,community_id":
                continue
            parts = line.rsplit(",", 1)
            if len(parts) != 2 or parts[0] not in g.index:
                raise ParseError(f"bad partition row {line!r}", line=lineno)
            labels[g.index[parts[0]]] = int(parts[1])
    if np.any(labels < 0):
        raise ParseError("partition does not cover every node")
    return Partition.from_labels(g, labels)


def labeled_csv_text(lp: LabeledPartition, algorithm: str, parameter: float | None) -> str:
    param = "none" if parameter is None else repr(parameter)
    lines = [
        f"# algorithm={algorithm} parameter={param} n_cut={lp.n_cut}\n",
        "node_id,category\n",
    ]
    ids = lp.base.graph.ids
    for i, cat in enumerate(lp.category.tolist()):
        lines.append(f"{ids[i]},{cat}\n")
    return "".join(lines)


def write_labeled_partition(
    lp: LabeledPartition, path: str | Path, algorithm: str, parameter: float | None
) -> None:
    Path(path).write_text(labeled_csv_text(lp, algorithm, parameter), encoding="utf-8")
