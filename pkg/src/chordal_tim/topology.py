"""Bipartite network topologies, unicast messages, and their JSON forms.

Sources and destinations are 0-based.  ``t(j, i)`` is 1 iff source ``i``
is connected to destination ``j``; the index coding side information is the
complement, ``antidote(j, i) = 1 - t(j, i)``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import TopologyError
from .rational import format_rational, parse_rational

Edge = tuple[int, int]  # (source, destination)


@dataclass(frozen=True)
class TopologyGraph:
    num_sources: int
    num_destinations: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        for name in ("num_sources", "num_destinations"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v <= 0:
                raise TopologyError(f"{name} must be a positive integer, got {v!r}")
        edges = []
        for e in self.edges:
            i, j = _edge_pair(e)
            if not (0 <= i < self.num_sources and 0 <= j < self.num_destinations):
                raise TopologyError(f"edge {(i, j)} out of range")
            edges.append((i, j))
        if len(set(edges)) != len(edges):
            raise TopologyError("duplicate edge")
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def from_edges(cls, num_sources: int, num_destinations: int, edges: Iterable) -> TopologyGraph:
        """Build a graph, rejecting duplicates (a frozenset would hide them)."""
        edges = [_edge_pair(e) for e in edges]
        if len(set(edges)) != len(edges):
            dup = next(e for e in edges if edges.count(e) > 1)
            raise TopologyError(f"duplicate edge {list(dup)}")
        return cls(num_sources, num_destinations, frozenset(edges))

    def connected(self, source: int, destination: int) -> bool:
        return (source, destination) in self.edges

    def t(self, j: int, i: int) -> int:
        """Topology matrix entry t_ji (destination j, source i)."""
        return int((i, j) in self.edges)

    def antidote(self, j: int, i: int) -> int:
        return 1 - self.t(j, i)

    def destinations_of(self, source: int) -> frozenset:
        return frozenset(j for (i, j) in self.edges if i == source)

    def sources_of(self, destination: int) -> frozenset:
        return frozenset(i for (i, j) in self.edges if j == destination)

    @property
    def connectivity(self) -> tuple:
        """M x N boolean matrix, source-major."""
        return tuple(
            tuple((i, j) in self.edges for j in range(self.num_destinations))
            for i in range(self.num_sources)
        )

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def transpose(self) -> TopologyGraph:
        """Swap the roles of sources and destinations."""
        return TopologyGraph(
            self.num_destinations, self.num_sources, frozenset((j, i) for i, j in self.edges)
        )

    def induced(self, sources: Iterable[int], destinations: Iterable[int]) -> TopologyGraph:
        """Sub-network on the given nodes, relabelled 0.. in the given order."""
        sources, destinations = list(sources), list(destinations)
        smap = {s: k for k, s in enumerate(sources)}
        dmap = {d: k for k, d in enumerate(destinations)}
        edges = frozenset(
            (smap[i], dmap[j]) for i, j in self.edges if i in smap and j in dmap
        )
        return TopologyGraph(len(sources), len(destinations), edges)


def _edge_pair(e) -> Edge:
    try:
        i, j = e
    except (TypeError, ValueError):
        raise TopologyError(f"edge must be a [source, destination] pair, got {e!r}") from None
    for v in (i, j):
        if isinstance(v, bool) or not isinstance(v, int):
            raise TopologyError(f"edge indices must be integers, got {e!r}")
    return (i, j)


@dataclass(frozen=True)
class Message:
    """Unicast message W_ji from source i to destination j."""

    source: int
    destination: int

    def sort_key(self) -> tuple:
        return (self.destination, self.source)

    def __lt__(self, other):
        if not isinstance(other, Message):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    @property
    def label(self) -> str:
        sep = "" if self.source < 10 and self.destination < 10 else ","
        return f"W_{self.destination}{sep}{self.source}"

    def __repr__(self):
        return self.label

    def to_json(self) -> list:
        return [self.source, self.destination]


class MessageSet:
    """Duplicate-free message set kept in canonical (destination, source) order."""

    __slots__ = ("messages", "_index")

    def __init__(self, messages: Iterable[Message] = ()):
        msgs = [m if isinstance(m, Message) else Message(*m) for m in messages]
        if len(set(msgs)) != len(msgs):
            raise TopologyError("duplicate message in message set")
        self.messages = tuple(sorted(msgs))
        self._index = {m: k for k, m in enumerate(self.messages)}

    def __iter__(self) -> Iterator[Message]:
        return iter(self.messages)

    def __len__(self):
        return len(self.messages)

    def __contains__(self, m):
        return m in self._index

    def __getitem__(self, k):
        return self.messages[k]

    def __eq__(self, other):
        return isinstance(other, MessageSet) and self.messages == other.messages

    def __hash__(self):
        return hash(self.messages)

    def __repr__(self):
        return f"MessageSet({list(self.messages)!r})"

    def index(self, m: Message) -> int:
        return self._index[m]

    def destinations(self) -> list:
        return sorted({m.destination for m in self.messages})

    def validate(self, g: TopologyGraph) -> None:
        for m in self.messages:
            if not g.connected(m.source, m.destination):
                raise TopologyError(
                    f"message {m.label} has no channel: source {m.source} is not "
                    f"connected to destination {m.destination}"
                )

    def to_json(self) -> list:
        return [m.to_json() for m in self.messages]


RateTuple = Mapping[Message, Fraction]


def all_unicast(g: TopologyGraph) -> MessageSet:
    return MessageSet(Message(i, j) for i, j in g.edges)


# --- JSON ---------------------------------------------------------------


def topology_to_dict(g: TopologyGraph) -> dict:
    return {
        "sources": g.num_sources,
        "destinations": g.num_destinations,
        "edges": [list(e) for e in g.sorted_edges()],
    }


def serialize_topology(g: TopologyGraph) -> str:
    return json.dumps(topology_to_dict(g))


def topology_from_dict(doc) -> TopologyGraph:
    if not isinstance(doc, dict):
        raise TopologyError("topology document must be a JSON object")
    missing = {"sources", "destinations", "edges"} - doc.keys()
    if missing:
        raise TopologyError(f"topology document missing fields: {sorted(missing)}")
    edges = doc["edges"]
    if not isinstance(edges, list):
        raise TopologyError("'edges' must be an array")
    return TopologyGraph.from_edges(doc["sources"], doc["destinations"], edges)


def parse_topology(text: str) -> TopologyGraph:
    try:
        doc = json.loads(text)
    except (json.JSONDecodeError, TypeError) as exc:
        raise TopologyError(f"malformed topology document: {exc}") from None
    return topology_from_dict(doc)


def parse_message_set(text: str | None, g: TopologyGraph) -> MessageSet:
    """Message-set JSON is an array of [source, destination]; None means all-unicast."""
    if text is None:
        return all_unicast(g)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TopologyError(f"malformed message-set document: {exc}") from None
    if not isinstance(doc, list):
        raise TopologyError("message-set document must be an array")
    ms = MessageSet(Message(*_edge_pair(p)) for p in doc)
    ms.validate(g)
    return ms


def rates_to_json(ms: MessageSet, r: RateTuple) -> list:
    return [[m.source, m.destination, format_rational(r.get(m, 0))] for m in ms]


def parse_rates(text: str, ms: MessageSet) -> dict:
    """Rates JSON: either an array of rational strings in canonical message
    order, or an array of [source, destination, "p/q"] triples."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TopologyError(f"malformed rates document: {exc}") from None
    if not isinstance(doc, list):
        raise TopologyError("rates document must be an array")
    try:
        if all(isinstance(x, str) for x in doc):
            if len(doc) != len(ms):
                raise TopologyError(
                    f"rates array has {len(doc)} entries for {len(ms)} messages"
                )
            rates = {m: parse_rational(x) for m, x in zip(ms, doc)}
        else:
            rates = {}
            for entry in doc:
                if not (isinstance(entry, list) and len(entry) == 3):
                    raise TopologyError(f"bad rate entry {entry!r}")
                m = Message(*_edge_pair(entry[:2]))
                if m in rates:
                    raise TopologyError(f"duplicate rate for {m.label}")
                rates[m] = parse_rational(entry[2])
    except ValueError as exc:
        if isinstance(exc, TopologyError):
            raise
        raise TopologyError(str(exc)) from None
    if any(v < 0 for v in rates.values()):
        raise TopologyError("rates must be nonnegative")
    return rates


# --- generators -----------------------------------------------------------


def gen_cycle(n: int) -> TopologyGraph:
    """Cyclic network: source i is connected to destinations i-1 and i (mod n).

    For n >= 3 the topology graph is a single chordless cycle of length 2n.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise TopologyError(f"cycle needs n >= 2, got {n!r}")
    return TopologyGraph(n, n, frozenset({(i, (i - 1) % n) for i in range(n)} | {(i, i) for i in range(n)}))


@dataclass(frozen=True)
class LineLayout:
    """Left-to-right orderings of sources and of destinations on a line."""

    source_order: tuple
    destination_order: tuple

    def __post_init__(self):
        object.__setattr__(self, "source_order", tuple(self.source_order))
        object.__setattr__(self, "destination_order", tuple(self.destination_order))
        for name in ("source_order", "destination_order"):
            order = getattr(self, name)
            if len(set(order)) != len(order):
                raise TopologyError(f"{name} has repeated nodes")

    def source_rank(self) -> dict:
        return {s: k for k, s in enumerate(self.source_order)}

    def destination_rank(self) -> dict:
        return {d: k for k, d in enumerate(self.destination_order)}

    def swapped(self) -> LineLayout:
        return LineLayout(self.destination_order, self.source_order)

    def to_dict(self) -> dict:
        return {
            "source_order": list(self.source_order),
            "destination_order": list(self.destination_order),
        }

    @classmethod
    def from_dict(cls, doc) -> LineLayout:
        if not isinstance(doc, dict) or not {"source_order", "destination_order"} <= doc.keys():
            raise TopologyError("layout must have source_order and destination_order")
        return cls(tuple(doc["source_order"]), tuple(doc["destination_order"]))


def gen_convex1d(seed, m: int, n: int) -> tuple[TopologyGraph, LineLayout]:
    """Random one-dimensional network with source convexity.

    Nodes get random distinct positions on a line; each source is heard by a
    contiguous (in line order) nonempty run of destinations.
    """
    if m < 1 or n < 1:
        raise TopologyError("need m, n >= 1")
    rng = random.Random(seed)
    source_order = list(range(m))
    destination_order = list(range(n))
    rng.shuffle(source_order)
    rng.shuffle(destination_order)
    edges = set()
    for i in range(m):
        lo = rng.randrange(n)
        span = min(n - lo, 1 + int(rng.expovariate(0.7)))
        for k in range(lo, lo + span):
            edges.add((i, destination_order[k]))
    return TopologyGraph(m, n, frozenset(edges)), LineLayout(source_order, destination_order)


def gen_random(seed, m: int, n: int, p: float = 0.4, max_edges: int | None = None) -> TopologyGraph:
    """Erdos-Renyi bipartite topology, optionally thinned to at most ``max_edges``."""
    rng = random.Random(seed)
    edges = [(i, j) for i in range(m) for j in range(n) if rng.random() < p]
    if max_edges is not None and len(edges) > max_edges:
        edges = rng.sample(edges, max_edges)
    return TopologyGraph(m, n, frozenset(edges))


def gen_tree(seed, num_nodes: int) -> TopologyGraph:
    """Random bipartite tree on ``num_nodes >= 2`` nodes (sources and destinations alternate by depth)."""
    if num_nodes < 2:
        raise TopologyError("a tree topology needs at least 2 nodes")
    rng = random.Random(seed)
    side = [0, 1]  # node 0 is a source, node 1 a destination
    parent_edges = [(0, 1)]
    for v in range(2, num_nodes):
        u = rng.randrange(v)
        side.append(1 - side[u])
        parent_edges.append((u, v))
    sid, did = {}, {}
    for v, s in enumerate(side):
        (sid if s == 0 else did)[v] = len(sid if s == 0 else did)
    edges = frozenset(
        (sid[u], did[v]) if side[u] == 0 else (sid[v], did[u]) for u, v in parent_edges
    )
    return TopologyGraph(len(sid), len(did), edges)
