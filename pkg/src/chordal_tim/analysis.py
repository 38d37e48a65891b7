"""Conflict graphs, chordality of the topology graph, and exact graph invariants."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from . import _search
from .errors import SizeLimitError, TopologyError
from .topology import Message, MessageSet, TopologyGraph, all_unicast

PERFECTNESS_LIMIT = 16


class ConflictGraph:
    """Undirected graph on messages; vertices keep the canonical message order."""

    __slots__ = ("vertices", "_adj")

    def __init__(self, vertices: MessageSet, edges: Iterable[tuple[Message, Message]] = ()):
        self.vertices = vertices
        adj = [0] * len(vertices)
        for a, b in edges:
            ia, ib = vertices.index(a), vertices.index(b)
            if ia == ib:
                continue
            adj[ia] |= 1 << ib
            adj[ib] |= 1 << ia
        self._adj = adj

    @classmethod
    def from_masks(cls, vertices: MessageSet, masks: list[int]) -> ConflictGraph:
        cg = cls(vertices)
        cg._adj = list(masks)
        return cg

    @property
    def masks(self) -> list[int]:
        return list(self._adj)

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        return (
            isinstance(other, ConflictGraph)
            and self.vertices == other.vertices
            and self._adj == other._adj
        )

    def __repr__(self):
        return f"ConflictGraph({len(self)} messages, {self.num_edges()} conflicts)"

    def adjacent(self, a: Message, b: Message) -> bool:
        return bool(self._adj[self.vertices.index(a)] >> self.vertices.index(b) & 1)

    def neighbors(self, m: Message) -> list[Message]:
        return [self.vertices[k] for k in _search.bits(self._adj[self.vertices.index(m)])]

    def edges(self) -> list[tuple[Message, Message]]:
        vs = self.vertices
        return [
            (vs[a], vs[b]) for a in range(len(vs)) for b in _search.bits(self._adj[a]) if a < b
        ]

    def num_edges(self) -> int:
        return sum(_search.popcount(a) for a in self._adj) // 2

    def is_independent(self, group: Iterable[Message]) -> bool:
        return all(not self.adjacent(a, b) for a, b in combinations(list(group), 2))

    def is_clique(self, group: Iterable[Message]) -> bool:
        return all(self.adjacent(a, b) for a, b in combinations(list(group), 2))

    def restrict(self, ms: Iterable[Message]) -> ConflictGraph:
        sub = MessageSet(ms)
        return ConflictGraph(sub, [(a, b) for a, b in self.edges() if a in sub and b in sub])

    def _messages(self, idx: Iterable[int]) -> tuple[Message, ...]:
        return tuple(self.vertices[k] for k in idx)


def conflicts(g: TopologyGraph, a: Message, b: Message) -> bool:
    """Same source, same destination, or either source interferes at the other destination."""
    return (
        a.source == b.source
        or a.destination == b.destination
        or g.connected(a.source, b.destination)
        or g.connected(b.source, a.destination)
    )


def conflict_graph(g: TopologyGraph, ms: MessageSet) -> ConflictGraph:
    ms.validate(g)
    return ConflictGraph(ms, [(a, b) for a, b in combinations(ms, 2) if conflicts(g, a, b)])


def square_of_line_graph(g: TopologyGraph) -> ConflictGraph:
    """Line graph of the topology graph, then its square (distance <= 2).

    Built purely from shared endpoints, without the interference rule, so it
    can serve as an independent check on ``conflict_graph``.
    """
    edges = all_unicast(g)
    n = len(edges)
    line = [0] * n
    for a, b in combinations(range(n), 2):
        ea, eb = edges[a], edges[b]
        if ea.source == eb.source or ea.destination == eb.destination:
            line[a] |= 1 << b
            line[b] |= 1 << a
    square = []
    for v in range(n):
        reach = line[v]
        for u in _search.bits(line[v]):
            reach |= line[u]
        square.append(reach & ~(1 << v))
    return ConflictGraph.from_masks(edges, square)


# --- chordality ---------------------------------------------------------------


@dataclass(frozen=True)
class ChordlessCycleWitness:
    """Closed walk S'_1, D'_1, S'_2, D'_2, ..., S'_n, D'_n with no chord.

    Source ``sources[k]`` is adjacent to ``destinations[k-1]`` and
    ``destinations[k]`` (indices mod n).
    """

    sources: tuple
    destinations: tuple

    @property
    def n(self) -> int:
        return len(self.sources)

    @property
    def length(self) -> int:
        return 2 * self.n

    def validate(self, g: TopologyGraph) -> None:
        n = self.n
        if n < 3 or len(self.destinations) != n:
            raise TopologyError("witness needs n >= 3 sources and n destinations")
        if len(set(self.sources)) != n or len(set(self.destinations)) != n:
            raise TopologyError("witness vertices are not distinct")
        cycle_edges = {(self.sources[k], self.destinations[k]) for k in range(n)}
        cycle_edges |= {(self.sources[k], self.destinations[k - 1]) for k in range(n)}
        induced = {(i, j) for i in self.sources for j in self.destinations if g.connected(i, j)}
        if induced != cycle_edges:
            raise TopologyError("witness is not a chordless cycle of the topology")

    def to_dict(self) -> dict:
        return {"sources": list(self.sources), "destinations": list(self.destinations)}


def _bipartite_masks(g: TopologyGraph) -> list[int]:
    m = g.num_sources
    adj = [0] * (m + g.num_destinations)
    for i, j in g.edges:
        adj[i] |= 1 << (m + j)
        adj[m + j] |= 1 << i
    return adj


def _witness_from_cycle(g: TopologyGraph, cycle: list[int]) -> ChordlessCycleWitness:
    m = g.num_sources
    k = min(range(len(cycle)), key=lambda p: cycle[p])  # smallest vertex is a source
    rot = cycle[k:] + cycle[:k]
    fwd, back = rot, [rot[0]] + rot[:0:-1]
    walk = min(fwd, back, key=lambda c: c[1])  # first destination is the smaller neighbour
    sources = tuple(walk[0::2])
    destinations = tuple(v - m for v in walk[1::2])
    return ChordlessCycleWitness(sources, destinations)


def chordless_long_cycles(g: TopologyGraph, length: int | None = None) -> list[ChordlessCycleWitness]:
    """All chordless cycles of length >= 6 (or exactly ``length``), as sorted witnesses."""
    adj = _bipartite_masks(g)
    lo, hi = (6, None) if length is None else (length, length)
    found = [_witness_from_cycle(g, c) for c in _search.induced_cycles(adj, lo, hi)]
    return sorted(found, key=lambda w: (w.length, w.sources, w.destinations))


def find_chordless_long_cycle(g: TopologyGraph) -> ChordlessCycleWitness | None:
    """Shortest, then lexicographically least, chordless cycle of length >= 6."""
    adj = _bipartite_masks(g)
    if _search.find_induced_cycle(adj, 6) is None:
        return None
    for length in range(6, len(adj) + 1, 2):
        cycles = chordless_long_cycles(g, length)
        if cycles:
            witness = cycles[0]
            witness.validate(g)
            return witness
    raise AssertionError("unreachable: a long chordless cycle was found earlier")


def is_chordal(g: TopologyGraph) -> bool:
    return _search.find_induced_cycle(_bipartite_masks(g), 6) is None


# --- cliques, colorings, perfection ------------------------------------------


def maximal_cliques(cg: ConflictGraph) -> list[tuple[Message, ...]]:
    return [cg._messages(c) for c in _search.maximal_cliques(cg.masks)]


def all_cliques(cg: ConflictGraph) -> list[tuple[Message, ...]]:
    """Every nonempty clique (diagnostics only: exponential in clique size)."""
    out = set()
    for c in _search.maximal_cliques(cg.masks):
        for r in range(1, len(c) + 1):
            out.update(combinations(c, r))
    return [cg._messages(c) for c in sorted(out)]


def maximal_independent_sets(cg: ConflictGraph) -> list[tuple[Message, ...]]:
    return [cg._messages(s) for s in _search.maximal_independent_sets(cg.masks)]


def clique_number(cg: ConflictGraph) -> int:
    return _search.clique_number(cg.masks)


def independence_number(cg: ConflictGraph) -> int:
    return _search.independence_number(cg.masks)


def chromatic_number(cg: ConflictGraph) -> int:
    return _search.chromatic_number(cg.masks)


def optimal_coloring(cg: ConflictGraph) -> list[tuple[Message, ...]]:
    """Color classes of a minimum proper coloring."""
    k = chromatic_number(cg)
    colors = _search.is_k_colorable(cg.masks, k) or []
    return [cg._messages(v for v, c in enumerate(colors) if c == col) for col in range(k)]


def find_odd_hole(cg: ConflictGraph) -> tuple[Message, ...] | None:
    c = _search.find_induced_cycle(cg.masks, 5, odd_only=True)
    return None if c is None else cg._messages(c)


def find_odd_antihole(cg: ConflictGraph) -> tuple[Message, ...] | None:
    c = _search.find_induced_cycle(_search.complement(cg.masks), 5, odd_only=True)
    return None if c is None else cg._messages(c)


def is_perfect(cg: ConflictGraph, max_size: int = PERFECTNESS_LIMIT) -> bool:
    """Berge test: no odd hole and no odd antihole of length >= 5."""
    if len(cg) > max_size:
        raise SizeLimitError(f"perfectness check capped at {max_size} vertices, got {len(cg)}")
    return find_odd_hole(cg) is None and find_odd_antihole(cg) is None
