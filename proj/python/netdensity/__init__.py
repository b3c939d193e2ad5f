"""Triangle-based local density measures on simple graphs."""

from ._netdensity import (
    DiGraph,
    Error,
    Graph,
    InvariantError,
    ParseError,
    brute_force_t,
    count_value,
    cut,
    edge_triangles,
    gen,
    measure,
    measure_names,
    neighborhood_edges,
    parse_net,
    read_net,
    top,
    write_net,
)

__all__ = [
    "DiGraph",
    "Error",
    "Graph",
    "InvariantError",
    "ParseError",
    "brute_force_t",
    "count_value",
    "cut",
    "edge_triangles",
    "gen",
    "measure",
    "measure_names",
    "neighborhood_edges",
    "parse_net",
    "read_net",
    "top",
    "write_net",
]
