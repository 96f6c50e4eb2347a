"""Edge-connectivity toolkit for small multigraphs.

Exact edge-disjoint path counts by unit-capacity max flow, edge-minimality,
quotients by the "k edge-disjoint paths" equivalence, vertex splitting along
non-trivial minimum cuts, and extraction of degree-k vertices in
edge-minimal k-edge-connected graphs.
"""

__version__ = "0.1.0"

from ._kernel import BACKEND
from .connectivity import (
    FlowResult,
    class_connectivity,
    edge_connectivity,
    global_edge_connectivity,
    is_exactly_k_edge_connected,
    is_k_edge_connected,
    lambda_matrix,
    local_edge_connectivity,
    min_edge_cut,
)
from .decomposition import (
    SplitLeaf,
    SplitNode,
    VertexSplit,
    WitnessPair,
    constructive_witnesses,
    count_nontrivial_min_cuts,
    decompose,
    find_nontrivial_min_cut,
    flow_cut_hint,
    is_quasi_k_regular,
    is_trivial_cut,
    scan_witnesses,
    theorem_witnesses,
    vertex_split,
)
from .errors import *  # noqa: F401,F403
from .harness import (
    EnumSpec,
    brute_force_lambda,
    enumerate_multigraphs,
    enumerate_trees,
    random_k_edge_connected,
    verify_propositions,
    verify_theorem,
)
from .minimality import MinimalityReport, cross_check_minimality, is_edge_minimal, reduce_to_edge_minimal
from .multigraph import (
    EdgeCut,
    Multigraph,
    add_edge,
    add_vertex,
    contract_vertex_sets,
    degree,
    format_mgraph,
    iter_mgraphs,
    parse_mgraph,
    remove_edge,
    subdivide_parallel_edges,
)
from .quotient import ClassPartition, QuotientGraph, check_quotient_properties, quotient_graph, r_k_classes
from .report import VerificationReport
