"""Localized Weisfeiler-Leman refinement and exact local subgraph counting.

The package is organised by concern:

* :mod:`localwl.graph` - the immutable :class:`Graph`, BFS layers and rooted balls
* :mod:`localwl.wl` - 1-WL and folklore k-WL with jointly canonical colors
* :mod:`localwl.local_wl` - Local, Layer and Recursive (1,2) variants
* :mod:`localwl.counting` - orbit-normalized local counting of small patterns
* :mod:`localwl.fragmentation` - induced counts of all graphs on <= 4 vertices
* :mod:`localwl.oracle` - brute-force ground truth used by the tests
* :mod:`localwl.io` and :mod:`localwl.cli` - file formats and the command line
"""

from __future__ import annotations

from .counting import (
    CountReport,
    Pattern,
    closed_form_star_and_matching,
    count_c4_subgraph,
    count_pattern,
    count_radius_one,
    count_triangles_fast,
    get_pattern,
    local_rooted_count,
    make_pattern,
    orbit_size,
)
from .errors import CapacityError, DisconnectedGraphError, GraphInputError, InvariantViolation, ParseError
from .fragmentation import SmallPatternId, clique_lift, frag_count, ind_count_le4, local_statistics
from .generators import gen_random
from .graph import Graph, RootedBall, bfs_layers, eccentricity_center, extract_ball
from .io import parse_graph, read_graph, serialize_graph, write_graph
from .local_wl import compare_local, layer_kwl, local_kwl, recursive_12_wl
from .oracle import hom_count, iso, oracle_count, spasm
from .wl import ColorHistogram, Coloring, Verdict, compare, refine_1wl, refine_kwl

__version__ = "0.1.0"

__all__ = [
    "CapacityError", "ColorHistogram", "Coloring", "CountReport", "DisconnectedGraphError", "Graph",
    "GraphInputError", "InvariantViolation", "ParseError", "Pattern", "RootedBall", "SmallPatternId",
    "Verdict", "bfs_layers", "clique_lift", "closed_form_star_and_matching", "compare", "compare_local",
    "count_c4_subgraph", "count_pattern", "count_radius_one", "count_triangles_fast", "eccentricity_center",
    "extract_ball", "frag_count", "gen_random", "get_pattern", "hom_count", "ind_count_le4", "iso",
    "layer_kwl", "local_kwl", "local_rooted_count", "local_statistics", "make_pattern", "oracle_count",
    "orbit_size", "parse_graph", "read_graph", "recursive_12_wl", "refine_1wl", "refine_kwl",
    "serialize_graph", "spasm", "write_graph",
]
