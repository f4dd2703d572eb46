from .build import DirectedEdgeBag, Graph, filter_min_degree, load_edge_list, to_undirected_max
from .centrality import AnchorSplit, CentralityScores, eigencentrality, quantile_split
from .io import read_graph, read_node_map, write_graph, write_node_map

__all__ = [
    "DirectedEdgeBag",
    "Graph",
    "load_edge_list",
    "to_undirected_max",
    "filter_min_degree",
    "CentralityScores",
    "AnchorSplit",
    "eigencentrality",
    "quantile_split",
    "write_graph",
    "read_graph",
    "write_node_map",
    "read_node_map",
]
