"""Exact metric, doubly resolving and strong dimension on small graph families."""

from __future__ import annotations

from .claims import Claim, ClaimReport, claim_registry, emit_table, verify_claims
from .constructors import (
    HGraph,
    LayeredProductGraph,
    LGraph,
    build_cycle,
    build_h,
    build_l,
    build_layered,
    build_path,
    cartesian_product,
    compatible,
    line_graph,
    neighborhood_of_clique,
    verify_isomorphism,
)
from .errors import BudgetExceeded, GraphError
from .families import build_family, parse_family, parse_vertex_set
from .graph import DistanceMatrix, Graph, all_pairs_distances, read_edge_list, write_edge_list
from .kernel import (
    is_doubly_resolving,
    is_resolving,
    is_strong_resolving,
    maximally_distant_from,
    mmd_pairs,
    representation,
    strongly_resolves,
)
from .namedsets import build_named_set
from .solvers import (
    SolveResult,
    SRGraph,
    build_sr_graph,
    greedy_upper_bound,
    min_doubly_resolving,
    min_resolving,
    min_strong_resolving,
    min_vertex_cover,
    solve,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
