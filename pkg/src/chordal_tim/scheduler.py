"""Orthogonal-access (fractional coloring) schedules realizing rate tuples.

A schedule time-shares conflict-free message groups.  Given a target rate
tuple r, the minimum total airtime is the covering LP

    min sum_S w_S   s.t.  sum_{S containing m} w_S >= r_m,  w >= 0

over maximal independent sets S of the conflict graph.  We solve its dual
(a packing LP with a trivially feasible slack basis) by exact simplex and
read the schedule weights off the optimal dual multipliers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import analysis
from .errors import InfeasibleScheduleError, KeyMismatchError, SizeLimitError
from .rational import format_rational
from .region import PolytopeVertex
from .simplex import maximize
from .topology import Message, MessageSet, TopologyGraph

SCHEDULE_LIMIT = 16


@dataclass(frozen=True)
class Slot:
    group: tuple  # messages, canonical order
    weight: Fraction


@dataclass(frozen=True)
class Schedule:
    slots: tuple

    @property
    def total_weight(self) -> Fraction:
        return sum((s.weight for s in self.slots), Fraction(0))

    def delivered(self) -> dict:
        out: dict = {}
        for s in self.slots:
            for m in s.group:
                out[m] = out.get(m, Fraction(0)) + s.weight
        return out

    def over_delivery(self, r: Mapping[Message, Fraction]) -> dict:
        got = self.delivered()
        return {m: got.get(m, 0) - v for m, v in r.items() if got.get(m, 0) > v}

    def to_dict(self) -> dict:
        return {
            "slots": [
                {"messages": [m.to_json() for m in s.group], "weight": format_rational(s.weight)}
                for s in self.slots
            ],
            "total_weight": format_rational(self.total_weight),
        }


def _canonical(slots) -> Schedule:
    merged: dict = {}
    for group, w in slots:
        if w == 0 or not group:
            continue
        key = tuple(sorted(group))
        merged[key] = merged.get(key, Fraction(0)) + w
    order = sorted(merged, key=lambda g: [m.sort_key() for m in g])
    return Schedule(tuple(Slot(g, merged[g]) for g in order))


def _targets(ms: MessageSet, r: Mapping[Message, Fraction]) -> list:
    foreign = [m for m in r if m not in ms]
    if foreign:
        raise KeyMismatchError(f"rates given for messages outside the message set: {foreign}")
    x = [Fraction(r.get(m, 0)) for m in ms]
    if any(v < 0 for v in x):
        raise ValueError("rates must be nonnegative")
    return x


def min_airtime(cg: analysis.ConflictGraph, r: Mapping[Message, Fraction]):
    """Solve the covering LP; returns (minimum total weight, [(group, weight)])."""
    ms = cg.vertices
    x = _targets(ms, r)
    groups = analysis.maximal_independent_sets(cg)
    A = [[int(m in g) for m in ms] for g in groups]
    res = maximize(x, A, [1] * len(groups))
    assert res.status == "optimal"  # every message lies in some group, so y <= 1
    weights = res.duals
    got = [sum(w for g, w in zip(groups, weights) if m in g) for m in ms]
    assert all(a >= b for a, b in zip(got, x)), "dual multipliers must cover the targets"
    assert sum(weights) == res.value
    return res.value, [(g, w) for g, w in zip(groups, weights) if w > 0]


def _trim(slots: list, r: Mapping[Message, Fraction]) -> list:
    """Remove over-delivery by dropping messages from (parts of) slots.

    Subsets of conflict-free groups stay conflict-free, so this keeps the
    schedule valid while making delivered rates equal requested ones.
    """
    slots = [(tuple(g), w) for g, w in slots]
    delivered: dict = {}
    for g, w in slots:
        for m in g:
            delivered[m] = delivered.get(m, Fraction(0)) + w
    for m in sorted(delivered):
        excess = delivered[m] - Fraction(r.get(m, 0))
        k = 0
        while excess > 0:
            g, w = slots[k]
            if m in g:
                reduced = tuple(v for v in g if v != m)
                if w <= excess:
                    slots[k] = (reduced, w)
                    excess -= w
                else:
                    slots[k] = (g, w - excess)
                    slots.append((reduced, excess))
                    excess = Fraction(0)
            k += 1
    return slots


def schedule(
    g: TopologyGraph,
    ms: MessageSet,
    r: Mapping[Message, Fraction],
    exact: bool = True,
    max_size: int = SCHEDULE_LIMIT,
) -> Schedule:
    """Fractional-coloring schedule delivering at least ``r`` within unit airtime.

    With ``exact`` (default) surplus is trimmed so every message gets exactly
    its requested rate; otherwise the raw LP schedule, which may over-deliver,
    is returned.  Raises InfeasibleScheduleError when the minimum airtime
    exceeds 1, which for in-region tuples can only happen off-chordal.
    """
    if len(ms) > max_size:
        raise SizeLimitError(f"scheduling capped at {max_size} messages, got {len(ms)}")
    cg = analysis.conflict_graph(g, ms)
    total, slots = min_airtime(cg, r)
    if total > 1:
        raise InfeasibleScheduleError(
            f"orthogonal access needs total airtime {total} > 1", min_total_weight=total
        )
    if exact:
        slots = _trim(slots, r)
    return _canonical(slots)


def verify_schedule(
    g: TopologyGraph, ms: MessageSet, r: Mapping[Message, Fraction], s: Schedule
) -> bool:
    """Independent re-check of a schedule: orthogonal slots, budget, coverage."""
    total = Fraction(0)
    got: dict = {}
    for slot in s.slots:
        if slot.weight <= 0:
            return False
        group = list(slot.group)
        if len(set(group)) != len(group) or any(m not in ms for m in group):
            return False
        for a in group:
            for b in group:
                if a == b:
                    continue
                if a.source == b.source or a.destination == b.destination:
                    return False
                if g.connected(a.source, b.destination) or g.connected(b.source, a.destination):
                    return False
        total += slot.weight
        for m in group:
            got[m] = got.get(m, Fraction(0)) + slot.weight
    if total > 1:
        return False
    return all(got.get(m, 0) >= Fraction(v) for m, v in r.items())


def corner_point_schedule(g: TopologyGraph, ms: MessageSet, v: PolytopeVertex) -> Schedule:
    """One-shot schedule for an integral vertex: its support, for the whole frame."""
    if not v.is_integral():
        raise ValueError(f"vertex {v.to_json()} is not integral")
    if len(v.coordinates) != len(ms):
        raise KeyMismatchError("vertex dimension does not match the message set")
    support = v.support(ms)
    return _canonical([(support, Fraction(1))]) if support else Schedule(())


def max_sum_rate(cg: analysis.ConflictGraph) -> Fraction:
    """Largest sum rate any unit-airtime orthogonal schedule delivers, by LP."""
    groups = analysis.maximal_independent_sets(cg)
    if not groups:
        return Fraction(0)
    res = maximize([len(grp) for grp in groups], [[1] * len(groups)], [1])
    return res.value
