"""Graph metric-geometry toolkit: hyperbolicity, distance-approximating trees,
tree-length, congestion under uniform demand, and discrete curvature."""

__version__ = "0.1.0"

from .graphs import (
    DistanceMatrix,
    Graph,
    GraphError,
    HalfInt,
    all_pairs,
    build_components,
    build_graph,
    count_paths_through,
    diameter,
    read_edge_list,
    write_edge_list,
)

__all__ = [
    "DistanceMatrix",
    "Graph",
    "GraphError",
    "HalfInt",
    "all_pairs",
    "build_components",
    "build_graph",
    "count_paths_through",
    "diameter",
    "read_edge_list",
    "write_edge_list",
    "__version__",
]
