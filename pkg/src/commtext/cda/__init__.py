from .bec import BecTrace, EdgeFScore, bec, bec_trace, edge_fscore
from .infomap import infomap
from .io import read_partition, write_labeled_partition, write_partition
from .louvain import louvain
from .mapeq import MapEquationTerms, map_equation
from .modularity import modularity
from .partition import LabeledPartition, Partition, truncate_partition

__all__ = [
    "Partition",
    "LabeledPartition",
    "truncate_partition",
    "modularity",
    "louvain",
    "MapEquationTerms",
    "map_equation",
    "infomap",
    "EdgeFScore",
    "edge_fscore",
    "bec",
    "bec_trace",
    "BecTrace",
    "write_partition",
    "read_partition",
    "write_labeled_partition",
]
