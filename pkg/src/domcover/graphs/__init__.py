"""
Graphs package: graph representation, family generators and domination.
"""

from .graph_core import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    EdgeListError,
    Family,
    FamilySpec,
    Graph,
    GraphError,
    MalformedLineError,
    ParameterBoundError,
    SelfLoopError,
    VertexRangeError,
    build,
    distance_matrix,
    emit_dot,
    emit_edge_list,
    is_dominating,
    multipartite_classes,
    parse_edge_list,
)

__all__ = [
    "DisconnectedGraphError",
    "DuplicateEdgeError",
    "EdgeListError",
    "Family",
    "FamilySpec",
    "Graph",
    "GraphError",
    "MalformedLineError",
    "ParameterBoundError",
    "SelfLoopError",
    "VertexRangeError",
    "build",
    "distance_matrix",
    "emit_dot",
    "emit_edge_list",
    "is_dominating",
    "multipartite_classes",
    "parse_edge_list",
]
