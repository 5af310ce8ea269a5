"""
Benchmark Families
==================

The subpackage families provides deterministic constructions of the set
families used to measure compression, each with a brute-force reference
that enumerates the same family directly from its definition.

A list of constructions present in topzdd.families:
    FamilySpec                        Parsed ``kind:key=value`` description
    build_by_states                   Layered state-machine construction
    gen_powerset                      All subsets of 1..A
    gen_bounded_range                 Sets with max - min <= B
    gen_bounded_card                  Sets with at most B elements
    gen_knapsack                      Sets within a random weight budget
    gen_matchings                     Matchings of a graph
    gen_grid_paths                    Corner-to-corner grid paths
    gen_nqueens                       Solutions of the n-queens problem

Graphs used by the matchings and path families:
    complete_graph                    Complete graph on k vertices
    grid_graph                        n x n vertex grid
    read_edge_list                    Edge-list file reader

"""

from .graphs import *
from .generators import *
from .oracles import *
from .spec import *

__all__ = [
    "FamilySpec",
    "build_by_states",
    "knapsack_weights",
    "gen_powerset",
    "gen_bounded_range",
    "gen_bounded_card",
    "gen_knapsack",
    "gen_matchings",
    "gen_grid_paths",
    "gen_nqueens",
    "nqueens_solutions",
    "complete_graph",
    "grid_graph",
    "read_edge_list",
    "simple_paths",
]
