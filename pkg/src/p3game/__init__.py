"""p3game: solvers for the P3-convexity labelling game on graphs.

Two players alternately label vertices of a graph; after each move the
labeled set is replaced by its P3-hull (any vertex with two labeled
neighbors is absorbed, repeatedly).  Under normal play, whoever cannot
move loses.  The package covers two rule sets: the free game, where any
unlabeled vertex may be chosen, and the connected game, where after the
first move every chosen vertex must be within distance two of the
labeled set.

Layout:

* :mod:`p3game.graphs` builds and serializes graphs (paths, cycles,
  stars, cliques, ladders, caterpillars, cographs from cotrees, plus
  seeded random families).
* :mod:`p3game.closure` computes P3-hulls, tests closedness, and
  enumerates legal moves for both variants.
* :mod:`p3game.engine` is the exhaustive Sprague-Grundy engine: exact
  values by memoized search, the ground truth everything else is
  checked against.
* :mod:`p3game.solvers` holds the per-family closed forms and
  polynomial-time dynamic programs (paths, cycles, ladders, stars,
  cliques, trees, caterpillars, cographs).
* :mod:`p3game.verify` sweeps each solver against the engine.
* :mod:`p3game.cli` is the command-line harness (solve, verify, gen,
  play).

Quick start::

    from p3game import make_path, start_position, Variant, grundy
    grundy(start_position(make_path(7), Variant.CONNECTED))
"""

from .graphs import (CaterpillarSpec, Cotree, Graph, GraphFormatError,
                     bits, components, cotree_leaves, emit_caterpillar,
                     emit_cotree, emit_graph, graph_digest, induced_subgraph,
                     is_tree, make_caterpillar, make_clique, make_cograph,
                     make_cycle, make_ladder, make_path, make_star, mask_of,
                     parse_caterpillar, parse_cotree, parse_graph,
                     random_biconnected_chordal, random_caterpillar_spec,
                     random_cotree, random_gnp, random_tree)
from .closure import (IllegalMoveError, Position, Variant, apply_move, hull,
                      hull_by_rescan, is_p3_closed, legal_moves,
                      start_position)
from .engine import (DEFAULT_BUDGET, Player, ResourceLimitError,
                     TranspositionTable, Verdict, best_move, decide,
                     free_grundy_by_components, grundy, mex, nim_sum)
from .solvers import (caterpillar_connected_winner, clique_free_winner,
                      cograph_free_winner, connected_cycle_arc_values,
                      connected_cycle_grundy, connected_path_f,
                      connected_path_grundy, cotree_grundy,
                      cotree_move_values, free_cycle_winner,
                      free_path_grundy, free_path_grundy_table,
                      ladder_connected_winner, star_free_winner,
                      tree_connected_grundy)
from .verify import FAMILIES, VerifyReport, run_family

__version__ = "0.1.0"

__all__ = [
    # graphs
    "Graph", "GraphFormatError", "CaterpillarSpec", "Cotree",
    "bits", "mask_of", "components", "induced_subgraph", "is_tree",
    "make_path", "make_cycle", "make_star", "make_clique", "make_ladder",
    "make_caterpillar", "make_cograph", "cotree_leaves",
    "parse_graph", "emit_graph", "graph_digest",
    "parse_cotree", "emit_cotree", "parse_caterpillar", "emit_caterpillar",
    "random_tree", "random_caterpillar_spec", "random_cotree",
    "random_biconnected_chordal", "random_gnp",
    # closure
    "Variant", "Position", "IllegalMoveError",
    "is_p3_closed", "hull", "hull_by_rescan", "legal_moves", "apply_move",
    "start_position",
    # engine
    "Player", "Verdict", "TranspositionTable", "ResourceLimitError",
    "DEFAULT_BUDGET", "mex", "nim_sum", "grundy", "decide", "best_move",
    "free_grundy_by_components",
    # solvers
    "connected_path_f", "connected_path_grundy",
    "connected_cycle_grundy", "connected_cycle_arc_values",
    "free_path_grundy_table", "free_path_grundy", "free_cycle_winner",
    "ladder_connected_winner", "star_free_winner", "clique_free_winner",
    "tree_connected_grundy", "caterpillar_connected_winner",
    "cograph_free_winner", "cotree_grundy", "cotree_move_values",
    # verify
    "VerifyReport", "FAMILIES", "run_family",
]
