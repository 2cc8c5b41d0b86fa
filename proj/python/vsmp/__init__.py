"""Vertex separation layouts: heuristics, an exact solver and generators."""

from ._core import (
    Error,
    Graph,
    InstanceTooLarge,
    InvalidParameter,
    InvalidVertex,
    IoError,
    NotABijection,
    ParseError,
    UnknownHeuristic,
    UnsupportedFormat,
    best_of_runs,
    construct_layout,
    cut_values,
    gen_complete,
    gen_cycle,
    gen_grid,
    gen_path,
    gen_random_tree,
    gen_star,
    instance_id,
    load_instance_file,
    optimal_vs,
    parse_edge_list,
    parse_matrix_market,
    realize_instance,
    to_edge_list,
    vertex_separation,
)

__version__ = "0.1.0"

__all__ = [
    "Error",
    "Graph",
    "InstanceTooLarge",
    "InvalidParameter",
    "InvalidVertex",
    "IoError",
    "NotABijection",
    "ParseError",
    "UnknownHeuristic",
    "UnsupportedFormat",
    "best_of_runs",
    "construct_layout",
    "cut_values",
    "gen_complete",
    "gen_cycle",
    "gen_grid",
    "gen_path",
    "gen_random_tree",
    "gen_star",
    "instance_id",
    "load_instance_file",
    "optimal_vs",
    "parse_edge_list",
    "parse_matrix_market",
    "realize_instance",
    "to_edge_list",
    "vertex_separation",
]
