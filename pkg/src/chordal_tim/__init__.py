"""Exact analysis of index coding / TIM topologies: chordality, the clique
capacity region, fractional-coloring schedules, and suboptimality
certificates for non-chordal networks."""

from .analysis import (
    ChordlessCycleWitness,
    ConflictGraph,
    chromatic_number,
    conflict_graph,
    find_chordless_long_cycle,
    independence_number,
    is_chordal,
    is_perfect,
    maximal_cliques,
    square_of_line_graph,
)
from .converse import SuboptimalityCertificate, certify_suboptimality, orthogonal_max_sum
from .demand import DemandGraph, demand_graph, is_acyclic, verify_clique_acyclicity
from .onedim import check_destination_convexity, check_source_convexity, convexity_implies_chordal_check
from .region import (
    PolytopeVertex,
    RegionPolytope,
    build_region,
    contains,
    enumerate_vertices,
    integral_vertices_check,
    sum_capacity,
    symmetric_capacity,
)
from .scheduler import Schedule, Slot, corner_point_schedule, schedule, verify_schedule
from .topology import (
    LineLayout,
    Message,
    MessageSet,
    TopologyGraph,
    all_unicast,
    gen_convex1d,
    gen_cycle,
    parse_topology,
    serialize_topology,
)

__version__ = "0.1.0"
