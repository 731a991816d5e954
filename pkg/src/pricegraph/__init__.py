"""Revenue-maximizing node pricing on graphs with bounded neighbor price gaps.

Exact solvers for small instances, approximation algorithms with proven
worst-case ratios, tight worst-case instance families, and verifiable
cut-problem constructions.
"""

from .approx import RatioReport, alg_general_k, alg_two_prices, guaranteed_ratio
from .bipartite import (
    BipartiteRestriction, Matching, max_matching, min_vertex_cover,
    restricted_subgraph,
)
from .exact import (
    DEFAULT_NODE_LIMIT, brute_force_opt, harmonic, price_sum_pk,
    single_price_best,
)
from .generators import (
    GeneratorSpec, gen_clique_harmonic, gen_clique_pk, gen_fig1, gen_nd_pinch,
    gen_random, generate,
)
from .instance import (
    EmptyInstanceError, Instance, ParseError, PriceVector, PricingError,
    SizeLimitError, Solution, ValidationError, adjacency, find_violation,
    is_feasible, max_bound, normalize, parse_instance, parse_price_vector,
    revenue, serialize_instance, serialize_price_vector, validate_prices,
)
from .reductions import (
    NodeCutReduction, ReductionOutput, TerminalGraph, apx_construct,
    apx_extract, apx_separator_vector, edge_cut_separates, lift_solution,
    min_terminal_node_cut,
    multi_demand_reduce, parse_terminal_graph, separates_terminals,
    separator_to_prices, serialize_sidecar, serialize_terminal_graph,
    tc_to_tnc, tnc_solution_transform, tnc_to_pricing,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
