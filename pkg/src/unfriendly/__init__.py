"""Unfriendly partitions of finite and countable graphs."""
from .closure import ClosureTrace, close, is_closed
from .coloring import (
    NeighborTally,
    Verdict,
    cross_edge_count,
    is_safe_unfriendly_at,
    is_unfriendly_partial,
    is_unfriendly_total,
    tally,
)
from .estimator import ClosureTransformer, UnfriendlyPartition
from .filter import Both, ChainState, Dom, Requirement, audit, extend_to_meet, meets, run_chain
from .graph import Ball, FiniteGraph, LazyGraph, components, generate, truncate
from .layered import (
    BipartitePair,
    DegreeClassMap,
    check_component_bound,
    layered_solve,
    maximal_bipartite_pair,
)
from .solvers import LevelTower, SolveReport, limit_partition, solve_exact, solve_local

__version__ = "0.1.0"
