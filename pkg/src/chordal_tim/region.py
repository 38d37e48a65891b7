"""The clique-inequality rate region and its exact vertex structure."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Mapping

from . import analysis
from .errors import KeyMismatchError, NotChordalError, SizeLimitError
from .rational import format_rational
from .topology import Message, MessageSet, TopologyGraph

VERTEX_LIMIT = 12
NOT_CHORDAL_WARNING = "not a valid capacity region: topology not chordal"


@dataclass(frozen=True)
class RegionPolytope:
    """{R >= 0 : sum of R over each clique <= 1}.

    Only maximal cliques are stored unless built with ``all_cliques=True``;
    the extra inequalities are implied.  ``chordal`` is False when the
    polytope is merely the orthogonal-access outer shell, not the capacity
    region.
    """

    messages: MessageSet
    inequalities: tuple
    chordal: bool
    conflict: analysis.ConflictGraph

    @property
    def warning(self) -> str | None:
        return None if self.chordal else NOT_CHORDAL_WARNING

    def to_dict(self) -> dict:
        doc = {
            "messages": self.messages.to_json(),
            "inequalities": [
                {"clique": [m.to_json() for m in c], "bound": "1"} for c in self.inequalities
            ],
            "chordal": self.chordal,
        }
        if self.warning:
            doc["warning"] = self.warning
        return doc


@dataclass(frozen=True)
class PolytopeVertex:
    coordinates: tuple  # Fractions, in message order

    def is_integral(self) -> bool:
        return all(v in (0, 1) for v in self.coordinates)

    def support(self, messages: MessageSet) -> tuple:
        return tuple(m for m, v in zip(messages, self.coordinates) if v != 0)

    def as_rates(self, messages: MessageSet) -> dict:
        return dict(zip(messages, self.coordinates))

    def to_json(self) -> list:
        return [format_rational(v) for v in self.coordinates]


def build_region(g: TopologyGraph, ms: MessageSet, all_cliques: bool = False) -> RegionPolytope:
    cg = analysis.conflict_graph(g, ms)
    cliques = analysis.all_cliques(cg) if all_cliques else analysis.maximal_cliques(cg)
    return RegionPolytope(ms, tuple(cliques), analysis.is_chordal(g), cg)


def _coordinates(rp: RegionPolytope, r: Mapping[Message, Fraction]) -> list:
    foreign = [m for m in r if m not in rp.messages]
    if foreign:
        raise KeyMismatchError(f"rates given for messages outside the region: {foreign}")
    return [Fraction(r.get(m, 0)) for m in rp.messages]


def contains(rp: RegionPolytope, r: Mapping[Message, Fraction]) -> bool:
    x = _coordinates(rp, r)
    if any(v < 0 for v in x):
        return False
    idx = rp.messages.index
    return all(sum(x[idx(m)] for m in c) <= 1 for c in rp.inequalities)


def violated_inequalities(rp: RegionPolytope, r: Mapping[Message, Fraction]) -> list:
    x = _coordinates(rp, r)
    idx = rp.messages.index
    return [c for c in rp.inequalities if sum(x[idx(m)] for m in c) > 1]


def _solve(rows: list, k: int) -> list | None:
    """Solve rows . x = 1 for a k x k 0/1 system; None if singular."""
    M = [[Fraction(v) for v in row] + [Fraction(1)] for row in rows]
    for col in range(k):
        piv = next((r for r in range(col, k) if M[r][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [v / p for v in M[col]]
        for r in range(k):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [u - f * v for u, v in zip(M[r], M[col])]
    return [M[r][k] for r in range(k)]


def enumerate_vertices(
    rp: RegionPolytope, max_size: int = VERTEX_LIMIT, method: str = "dd"
) -> list[PolytopeVertex]:
    """Every vertex of the region, exactly, canonically sorted.

    ``method="dd"`` runs the double description method on the homogenized
    cone in integer arithmetic; ``method="tight-set"`` exhausts tight
    constraint sets.  The two are independent and must agree.
    """
    d = len(rp.messages)
    if d > max_size:
        raise SizeLimitError(f"vertex enumeration capped at {max_size} messages, got {d}")
    if method == "dd":
        return _vertices_dd(rp)
    if method == "tight-set":
        return _vertices_tight_set(rp)
    raise ValueError(f"unknown vertex enumeration method {method!r}")


def _vertices_dd(rp: RegionPolytope) -> list[PolytopeVertex]:
    """Double description on {(x, t) : x >= 0, t >= 0, sum_C x - t <= 0}.

    Starts from the orthant's unit rays and inserts one clique constraint at
    a time, keeping rays on the feasible side and combining adjacent pairs
    across the hyperplane.  Adjacency is the combinatorial test: no third
    ray is tight on every constraint the pair shares.  Rays stay integral.
    """
    d = len(rp.messages)
    idx = rp.messages.index
    dim = d + 1  # coordinate d is the homogenizing t
    rays = []
    for k in range(dim):
        ray = [0] * dim
        ray[k] = 1
        # tight set as a bitmask over constraints; bit k = (coordinate k >= 0)
        rays.append((tuple(ray), ((1 << dim) - 1) & ~(1 << k)))
    for c_num, clique in enumerate(rp.inequalities):
        row = [0] * dim
        for m in clique:
            row[idx(m)] = 1
        row[d] = -1
        bit = 1 << (dim + c_num)
        plus, minus, zero = [], [], []
        for ray, tight in rays:
            h = sum(a * b for a, b in zip(row, ray))
            (plus if h > 0 else minus if h < 0 else zero).append((ray, tight, h))
        new = [(ray, tight) for ray, tight, _ in minus]
        new += [(ray, tight | bit) for ray, tight, _ in zero]
        others = [t for _, t, _ in plus + minus + zero]
        for p, tp, hp in plus:
            for q, tq, hq in minus:
                common = tp & tq
                if bin(common).count("1") < dim - 2:
                    continue
                hits = sum(1 for t in others if t & common == common)
                if hits > 2:
                    continue
                r = [hp * b - hq * a for a, b in zip(p, q)]
                g = 0
                for v in r:
                    g = gcd(g, v)
                new.append((tuple(v // g for v in r), common | bit))
        rays = new
    found = set()
    for ray, _ in rays:
        t = ray[d]
        if t > 0:
            found.add(tuple(Fraction(v, t) for v in ray[:d]))
    return [PolytopeVertex(v) for v in sorted(found)]


def _vertices_tight_set(rp: RegionPolytope) -> list[PolytopeVertex]:
    """Every vertex, by exhaustive choice of tight constraints.

    A vertex with support F has x = 0 off F (those nonnegativity constraints
    are tight) and is the unique solution of |F| linearly independent clique
    rows, restricted to F, holding with equality.  All (F, rows) choices are
    tried and the feasible strictly-positive-on-F solutions kept.
    """
    d = len(rp.messages)
    idx = rp.messages.index
    clique_masks = [sum(1 << idx(m) for m in c) for c in rp.inequalities]
    found = {tuple([Fraction(0)] * d)}
    for support in range(1, 1 << d):
        cols = [k for k in range(d) if support >> k & 1]
        rows = sorted({cm & support for cm in clique_masks} - {0})
        if len(rows) < len(cols):
            continue
        covered = 0
        for r in rows:
            covered |= r
        if covered != support:
            continue
        for chosen in combinations(rows, len(cols)):
            sol = _solve([[cm >> k & 1 for k in cols] for cm in chosen], len(cols))
            if sol is None or any(v <= 0 for v in sol):
                continue
            if any(sum(v for k, v in zip(cols, sol) if r >> k & 1) > 1 for r in rows):
                continue
            x = [Fraction(0)] * d
            for k, v in zip(cols, sol):
                x[k] = v
            found.add(tuple(x))
    return [PolytopeVertex(v) for v in sorted(found)]


def integral_vertices_check(rp: RegionPolytope, max_size: int = VERTEX_LIMIT) -> bool:
    """True iff every vertex is 0/1 and each vertex's support is conflict-free."""
    for v in enumerate_vertices(rp, max_size):
        if not v.is_integral():
            return False
        if not rp.conflict.is_independent(v.support(rp.messages)):
            return False
    return True


def _require_chordal(g: TopologyGraph) -> None:
    witness = analysis.find_chordless_long_cycle(g)
    if witness is not None:
        raise NotChordalError(
            "topology is not chordal: coloring numbers only bound orthogonal access", witness
        )


def symmetric_capacity(g: TopologyGraph, ms: MessageSet) -> Fraction:
    """1 / chromatic number of the conflict graph (chordal topologies only)."""
    _require_chordal(g)
    if len(ms) == 0:
        raise ValueError("symmetric capacity of an empty message set is undefined")
    return Fraction(1, analysis.chromatic_number(analysis.conflict_graph(g, ms)))


def sum_capacity(g: TopologyGraph, ms: MessageSet) -> int:
    """Independence number of the conflict graph (chordal topologies only)."""
    _require_chordal(g)
    return analysis.independence_number(analysis.conflict_graph(g, ms))
