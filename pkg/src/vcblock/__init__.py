"""Blocking sets, elimination distance and component reduction for vertex cover."""

from .blocking import (
    BlockingProfile,
    BlockingVerdict,
    blocking_profile,
    deficit,
    is_blocking_set,
    is_blocking_set_apex,
    is_minimal_blocking_set,
    max_minimal_blocking_set_size,
    shrink_to_minimal,
    verdict,
    verify_blocking_basics,
)
from .classes import ClassOracle, beta_upper_bound, get_oracle, member, solve_in_class
from .elimination import (
    EliminationForest,
    Exceeds,
    elimination_distance,
    elimination_forest,
    solve_vc_bounded_ed,
    verify_forest,
)
from .exact import (
    INFEASIBLE,
    Cover,
    HalfIntegralSolution,
    has_cover_of_size,
    konig_cover,
    lp_half_integral,
    max_matching_bipartite,
    nemhauser_trotter,
    opt_value,
    saturate_or_violator,
    solve_vc_exact,
)
from .gadgets import GadgetWitness, build_lb_tower, transform_hypergraph_vc, verify_witness
from .graph import Graph, GraphInputError, Hypergraph, connected_components, induced_subgraph, remove_vertices
from .instance import ModulatorInstance
from .io import ParseError, emit_instance, parse_instance
from .kernelize import (
    ReductionTrace,
    apply_rule_1,
    is_yes,
    kernelize_to_base,
    lp_modulator,
    reduce_depth_once,
)

__version__ = "0.1.0"
