"""Demand graphs, their acyclicity, and the clique/acyclicity check on chordal topologies."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from graphlib import CycleError, TopologicalSorter
from itertools import combinations

from .analysis import conflict_graph, find_chordless_long_cycle, maximal_cliques
from .errors import NotChordalError, SizeLimitError
from .topology import Message, MessageSet, TopologyGraph, all_unicast

CLIQUE_CHECK_LIMIT = 16


@dataclass(frozen=True)
class DemandGraph:
    """Directed bipartite graph; nodes are ('W', Message) and ('D', destination)."""

    message_nodes: MessageSet
    destination_nodes: tuple
    edges: frozenset

    def successors(self, node) -> list:
        return sorted((b for a, b in self.edges if a == node), key=_node_key)

    def find_cycle(self) -> list | None:
        try:
            self._sorter().prepare()
        except CycleError as exc:
            cyc = exc.args[1]
            return list(cyc[:-1])
        return None

    def _sorter(self) -> TopologicalSorter:
        ts = TopologicalSorter()
        for m in self.message_nodes:
            ts.add(("W", m))
        for j in self.destination_nodes:
            ts.add(("D", j))
        for a, b in sorted(self.edges, key=lambda e: (_node_key(e[0]), _node_key(e[1]))):
            ts.add(b, a)
        return ts


def _node_key(node):
    kind, x = node
    return (0, x.sort_key()) if kind == "W" else (1, (x,))


def demand_graph(g: TopologyGraph, ms: MessageSet) -> DemandGraph:
    ms.validate(g)
    dests = tuple(ms.destinations())
    edges = {(("W", m), ("D", m.destination)) for m in ms}
    edges |= {(("D", j), ("W", m)) for m in ms for j in dests if not g.connected(m.source, j)}
    return DemandGraph(ms, dests, frozenset(edges))


def is_acyclic(dg: DemandGraph) -> bool:
    return dg.find_cycle() is None


def sum_rate_bound(g: TopologyGraph, ms: MessageSet) -> Fraction | None:
    """Bound 1 on the sum rate of ``ms`` if its demand graph is acyclic, else None."""
    return Fraction(1) if is_acyclic(demand_graph(g, ms)) else None


def acyclic_message_sets(g: TopologyGraph, ms: MessageSet, max_size: int = 12) -> list[tuple[Message, ...]]:
    """Inclusion-maximal subsets of ``ms`` with acyclic demand graphs (diagnostics)."""
    if len(ms) > max_size:
        raise SizeLimitError(f"acyclic-set enumeration capped at {max_size} messages")
    msgs = list(ms)
    acyclic = [
        frozenset(s)
        for r in range(1, len(msgs) + 1)
        for s in combinations(msgs, r)
        if is_acyclic(demand_graph(g, MessageSet(s)))
    ]
    maximal = [s for s in acyclic if not any(s < t for t in acyclic)]
    return sorted(tuple(sorted(s)) for s in maximal)


@dataclass
class VerificationReport:
    status: str  # "pass" | "fail" | "not applicable"
    checked_cliques: int | None = None
    counterexample: tuple | None = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        doc = {"status": self.status}
        if self.checked_cliques is not None:
            doc["checked_cliques"] = self.checked_cliques
        if self.counterexample is not None:
            doc["counterexample"] = [m.to_json() for m in self.counterexample]
        doc.update(self.details)
        return doc


def verify_clique_acyclicity(g: TopologyGraph, max_size: int = CLIQUE_CHECK_LIMIT) -> VerificationReport:
    """Check that every maximal clique of the all-unicast conflict graph has an
    acyclic demand graph.  Requires a chordal topology; a failure would be a
    genuine counterexample and is returned, not raised."""
    witness = find_chordless_long_cycle(g)
    if witness is not None:
        raise NotChordalError("topology is not chordal; the clique/acyclicity property need not hold", witness)
    ms = all_unicast(g)
    if len(ms) > max_size:
        raise SizeLimitError(f"clique check capped at {max_size} messages, got {len(ms)}")
    cliques = maximal_cliques(conflict_graph(g, ms))
    for k, c in enumerate(cliques, 1):
        if not is_acyclic(demand_graph(g, MessageSet(c))):
            return VerificationReport("fail", k, tuple(c))
    return VerificationReport("pass", len(cliques))

