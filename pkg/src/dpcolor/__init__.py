"""DP-coloring (correspondence coloring) of graphs.

Cover construction and verification, exact search, exact DP-chromatic
numbers of small graphs, and a constructive DP-4-coloring for planar graphs
without 4-cycles.
"""

from .cover import (
    CoverGraph,
    MatchingAssignment,
    SignedGraph,
    build_cover,
    full_lists,
    identity_matchings,
    nk,
    random_matchings,
    signed_instance,
    twist,
    verify_coloring,
)
from .graph import F53Witness, Graph, degeneracy, find_f53, generate, has_cycle_len, parse_graph, remove_vertices
from .solver import (
    brute_force_transversal,
    color_gadget,
    color_planar_c4free,
    direct_list_color,
    direct_signed_color,
    dp_chromatic,
    greedy_degenerate_color,
    reduce,
    residual_list,
    solve_transversal,
)

__version__ = "0.1.0"
