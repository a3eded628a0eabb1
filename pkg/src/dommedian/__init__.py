"""Dominating graphs of graphs, median graphs and partial cubes.

Build the dominating graph D(G) of a small host graph, decide whether it is a
median graph, recognise partial cubes, and re-run exhaustive checks of the
characterisations that tie these notions together.
"""

from .domgraph import DomGraph, build_dominating_graph, check_hamming_isometry, geodesic
from .domination import (
    Classification,
    DomFamily,
    classify,
    dm_star_witness,
    domination_number,
    enumerate_dominating,
    enumerate_minimal_dominating,
    find_non_median_witness,
    inverse_dominating_pair,
    inverse_domination_number,
    is_dm_characterized,
    is_dm_star,
    is_dominating,
    is_mdscomds,
    is_mdscomds_characterized,
    mdscomds_witness,
)
from .graph import (
    Graph,
    LeafStatus,
    corona_k1,
    cycle_graph,
    format_set,
    leaf_completion,
    new_graph,
    path_graph,
    star,
    star_graph,
)
from .graph_io import parse_edgelist, parse_graph6, write_dot, write_edgelist, write_graph6
from .harness import VERIFIERS, Report, verify_theorem_3_1
from .metric import all_pairs_distances, hypercube_labeling, is_median_graph, is_partial_cube

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "DomFamily",
    "DomGraph",
    "Graph",
    "LeafStatus",
    "Report",
    "VERIFIERS",
    "all_pairs_distances",
    "build_dominating_graph",
    "check_hamming_isometry",
    "classify",
    "corona_k1",
    "cycle_graph",
    "dm_star_witness",
    "domination_number",
    "enumerate_dominating",
    "enumerate_minimal_dominating",
    "find_non_median_witness",
    "format_set",
    "geodesic",
    "hypercube_labeling",
    "inverse_dominating_pair",
    "inverse_domination_number",
    "is_dm_characterized",
    "is_dm_star",
    "is_dominating",
    "is_mdscomds",
    "is_mdscomds_characterized",
    "is_median_graph",
    "is_partial_cube",
    "leaf_completion",
    "mdscomds_witness",
    "new_graph",
    "parse_edgelist",
    "parse_graph6",
    "path_graph",
    "star",
    "star_graph",
    "verify_theorem_3_1",
    "write_dot",
    "write_edgelist",
    "write_graph6",
]
