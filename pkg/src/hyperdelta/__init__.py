"""Exact Gromov hyperbolicity constants of small graphs with unit-length edges.

Values are exact multiples of 1/4 (:class:`QuarterLength`).  The library
computes delta by geodesic-triangle search on the quarter grid, builds the
standard extremal families, evaluates closed forms for the extremal values
over girth/circumference classes, and checks those forms against exhaustive
enumeration.
"""
from .constructions import (
    ChainLayout,
    ChainSpec,
    ThetaSpec,
    attach_pendants,
    basic,
    build_chain,
    chain,
    complete,
    cycle,
    gamma,
    lambda_,
    path,
    theta,
    witness_e,
    witness_v,
)
from .enumeration import (
    EnumerationQuery,
    are_isomorphic,
    canonical_form,
    canonical_key,
    count_graphs,
    enumerate_graphs,
)
from .errors import (
    BudgetExceeded,
    CapExceeded,
    ConstraintViolationError,
    ConstructionError,
    DisconnectedError,
    DuplicateEdgeError,
    EmptyGraphError,
    GraphError,
    HyperdeltaError,
    InvalidSizeError,
    InvalidVertexError,
    LimitExceeded,
    LoopEdgeError,
    MultiEdgeError,
    NotAdmissibleError,
    OddSizeError,
    OrderViolationError,
    SizeTooSmallError,
)
from .extremal import (
    EDGE,
    VERTEX,
    BoundaryTriple,
    BoundCaseParams,
    Triplet,
    a_bounds,
    alpha_bounds,
    alpha_params,
    b_value,
    beta_value,
    boundary_triple,
    e_admissible,
    extremal_interval,
    refine,
    trichotomy_params,
    v_admissible,
)
from .graph import (
    MetricGraph,
    build_graph,
    format_edge_list,
    induced_on_edges,
    parse_edge_list,
    read_edge_list,
    relabel,
    subdivide,
    write_edge_list,
)
from .hyperbolicity import (
    DeltaResult,
    Geodesic,
    GeodesicTriangle,
    delta_bounds,
    delta_exact,
    delta_of_triangle,
    enumerate_geodesics,
    is_delta_one,
)
from .lengths import QuarterLength, ValueInterval, format_value, q
from .metric import DiameterReport, GraphPoint, GridMetric, diameters, grid_metric, vertex_edge_within_one
from .structure import (
    Cycle,
    TDecomposition,
    circumference,
    cycle_lengths,
    girth,
    longest_cycle,
    shortest_cycle_at_least,
    t_decomposition,
)
from .verify import EmpiricalReport, SuiteReport, empirical_extremal, sweep, theorem_suite

__version__ = "0.1.0"
