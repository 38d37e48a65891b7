"""Deterministic corpora of small topologies for sweeps and acceptance runs."""

from __future__ import annotations

import random
from fractions import Fraction

from .analysis import is_chordal
from .topology import MessageSet, TopologyGraph, gen_convex1d, gen_random, gen_tree


def chordal_corpus(count: int, max_messages: int, seed: int = 0, min_messages: int = 1) -> list[TopologyGraph]:
    """``count`` distinct chordal topologies with min..max edges.

    Roughly a third each of filtered random bipartite graphs, one-dimensional
    source-convex networks, and trees; duplicates are skipped.
    """
    rng = random.Random(seed)
    out, seen = [], set()
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 200 * count:
            raise RuntimeError("could not fill the chordal corpus")
        kind = len(out) % 3
        s = rng.randrange(1 << 30)
        if kind == 0:
            m, n = rng.randint(2, 6), rng.randint(2, 6)
            g = gen_random(s, m, n, p=rng.uniform(0.25, 0.7), max_edges=max_messages)
        elif kind == 1:
            g, _ = gen_convex1d(s, rng.randint(2, 7), rng.randint(2, 7))
        else:
            g = gen_tree(s, rng.randint(min(4, max_messages + 1), max_messages + 1))
        key = (g.num_sources, g.num_destinations, tuple(g.sorted_edges()))
        if not (min_messages <= len(g.edges) <= max_messages) or key in seen:
            continue
        if not is_chordal(g):
            continue
        seen.add(key)
        out.append(g)
    return out


def random_topologies(count: int, max_edges: int, seed: int = 0) -> list[TopologyGraph]:
    """Unfiltered random topologies (chordal or not) with at most ``max_edges`` edges."""
    rng = random.Random(seed)
    return [
        gen_random(rng.randrange(1 << 30), rng.randint(1, 5), rng.randint(1, 5),
                   p=rng.uniform(0.2, 0.8), max_edges=max_edges)
        for _ in range(count)
    ]


def random_point_in_region(rp, rng: random.Random, boundary: bool = False, max_den: int = 12) -> dict:
    """Random rational rate tuple inside the clique region.

    Draws nonnegative rationals and scales them down so the tightest clique
    sum is at most 1 (exactly 1 when ``boundary``).
    """
    ms: MessageSet = rp.messages
    x = {m: Fraction(rng.randint(0, max_den), rng.randint(1, max_den)) for m in ms}
    if all(v == 0 for v in x.values()) and len(ms):
        x[ms[0]] = Fraction(1, 2)
    worst = max((sum(x[m] for m in c) for c in rp.inequalities), default=Fraction(0))
    if worst > 1 or (boundary and worst > 0):
        x = {m: v / worst for m, v in x.items()}
    return x
