"""On-disk formats for graphs and node-id maps."""

from __future__ import annotations

from pathlib import Path

from ..errors import ParseError
from .build import Graph, load_edge_list


def _format_weight(w: float) -> str:
    if w == int(w) and abs(w) < 1e15:
        return str(int(w))
    return repr(w)


def graph_csv_text(g: Graph) -> str:
    """Canonical undirected edge list (one line per edge, u < v)."""
    lines = ["# undirected edge list: src,dst,weight\n"]
    u, v, w = g.edge_arrays()
    for i in range(u.size):
        lines.append(f"{g.ids[u[i]]},{g.ids[v[i]]},{_format_weight(float(w[i]))}\n")
    return "".join(lines)


def node_map_text(g: Graph) -> str:
    lines = ["node_id,index\n"]
    lines.extend(f"{nid},{i}\n" for i, nid in enumerate(g.ids))
    return "".join(lines)


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(graph_csv_text(g), encoding="utf-8")


def read_graph(path: str | Path) -> Graph:
    """Read a canonical undirected edge list written by write_graph."""
    with open(path, "r", encoding="utf-8") as fh:
        bag = load_edge_list(fh)
    from .build import to_undirected_max

    return to_undirected_max(bag)


def write_node_map(g: Graph, path: str | Path) -> None:
    Path(path).write_text(node_map_text(g), encoding="utf-8")


def read_node_map(path: str | Path) -> dict[str, int]:
    mapping: dict[str, int] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line == "node_id,index" or line.startswith("#"):
                continue
            parts = line.rsplit(",", 1)
            if len(parts) != 2:
                raise ParseError(f"bad node map entry {line!r}", line=lineno)
            try:
                mapping[parts[0]] = int(parts[1])
            except ValueError:
                raise ParseError(f"bad index {parts[1]!r}", line=lineno) from None
    return mapping
