"""Source/destination convexity of networks laid out on a line."""

from __future__ import annotations

from .analysis import find_chordless_long_cycle
from .demand import VerificationReport
from .errors import TopologyError
from .topology import LineLayout, TopologyGraph

__all__ = [
    "LineLayout",
    "check_source_convexity",
    "check_destination_convexity",
    "convexity_implies_chordal_check",
]


def _check_layout(g: TopologyGraph, layout: LineLayout) -> None:
    if sorted(layout.source_order) != list(range(g.num_sources)):
        raise TopologyError("layout does not order exactly the sources of the topology")
    if sorted(layout.destination_order) != list(range(g.num_destinations)):
        raise TopologyError("layout does not order exactly the destinations of the topology")


def check_source_convexity(g: TopologyGraph, layout: LineLayout) -> bool:
    """Every source is heard by a contiguous run of destinations along the line."""
    _check_layout(g, layout)
    rank = layout.destination_rank()
    for i in range(g.num_sources):
        pos = sorted(rank[j] for j in g.destinations_of(i))
        if pos and pos[-1] - pos[0] + 1 != len(pos):
            return False
    return True


def check_destination_convexity(g: TopologyGraph, layout: LineLayout) -> bool:
    """Every destination hears a contiguous run of sources along the line."""
    _check_layout(g, layout)
    rank = layout.source_rank()
    for j in range(g.num_destinations):
        pos = sorted(rank[i] for i in g.sources_of(j))
        if pos and pos[-1] - pos[0] + 1 != len(pos):
            return False
    return True


def convexity_implies_chordal_check(g: TopologyGraph, layout: LineLayout) -> VerificationReport:
    source_convex = check_source_convexity(g, layout)
    destination_convex = check_destination_convexity(g, layout)
    details = {"source_convex": source_convex, "destination_convex": destination_convex}
    if not (source_convex or destination_convex):
        return VerificationReport("not applicable", details=details)
    witness = find_chordless_long_cycle(g)
    if witness is None:
        return VerificationReport("pass", details=details)
    details["witness"] = witness.to_dict()
    return VerificationReport("fail", details=details)
