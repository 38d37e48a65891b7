"""Certificates that orthogonal access falls short on non-chordal topologies.

Take a shortest chordless cycle S'_1 D'_1 ... S'_n D'_n.  On the induced
cyclic sub-network, a rate tuple known to be achievable by a coding scheme
(cited, not re-derived here) is compared with the best sum rate orthogonal
access can deliver:

* n odd: one message per source S'_k -> D'_k; multicast/CDMA gives 1/2
  each, sum n/2.
* n even: all 2n unicast messages; interference alignment gives 1/3 each,
  sum 2n/3.  Under arbitrary channel coherence a blind scheme is cited at
  (n+1)/2 sum-DoF instead; that claim is carried as metadata only.

Only the orthogonal side is computed: the independence number of the
conflict graph of the chosen messages, checked against the scheduling LP.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import analysis
from .errors import CertificateError, ChordalTopologyError, SizeLimitError
from .rational import format_rational
from .region import build_region, contains
from .scheduler import max_sum_rate
from .topology import Message, MessageSet, TopologyGraph


@dataclass(frozen=True)
class SuboptimalityCertificate:
    witness: analysis.ChordlessCycleWitness
    message_set: MessageSet
    claimed_tuple: dict
    claimed_source: str
    orthogonal_max_sum: Fraction
    diagnostics: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.witness.n

    @property
    def parity(self) -> str:
        return "odd" if self.n % 2 else "even"

    @property
    def claimed_sum(self) -> Fraction:
        return sum(self.claimed_tuple.values(), Fraction(0))

    @property
    def gap(self) -> Fraction:
        return self.claimed_sum - self.orthogonal_max_sum

    def to_dict(self) -> dict:
        doc = {
            "cycle": self.witness.to_dict(),
            "n": self.n,
            "parity": self.parity,
            "messages": self.message_set.to_json(),
            "claimed_tuple": [format_rational(self.claimed_tuple[m]) for m in self.message_set],
            "claimed_source": self.claimed_source,
            "claimed_sum": format_rational(self.claimed_sum),
            "orthogonal_max_sum": format_rational(self.orthogonal_max_sum),
            "gap": format_rational(self.gap),
        }
        doc.update(self.diagnostics)
        return doc


def interference_channel_messages(w: analysis.ChordlessCycleWitness) -> MessageSet:
    return MessageSet(Message(s, d) for s, d in zip(w.sources, w.destinations))


def cycle_unicast_messages(w: analysis.ChordlessCycleWitness) -> MessageSet:
    n = w.n
    return MessageSet(
        [Message(w.sources[k], w.destinations[k]) for k in range(n)]
        + [Message(w.sources[k], w.destinations[k - 1]) for k in range(n)]
    )


def orthogonal_max_sum(g: TopologyGraph, ms: MessageSet, max_size: int = 16) -> Fraction:
    """Best sum rate of orthogonal access on ``ms``: the independence number,
    confirmed against the scheduling LP."""
    if len(ms) > max_size:
        raise SizeLimitError(f"orthogonal max-sum capped at {max_size} messages, got {len(ms)}")
    cg = analysis.conflict_graph(g, ms)
    alpha = Fraction(analysis.independence_number(cg))
    lp = max_sum_rate(cg)
    if lp != alpha:
        raise AssertionError(f"scheduling LP max sum {lp} disagrees with independence number {alpha}")
    return alpha


def certify_suboptimality(g: TopologyGraph) -> SuboptimalityCertificate:
    witness = analysis.find_chordless_long_cycle(g)
    if witness is None:
        raise ChordalTopologyError("topology is chordal: orthogonal access is optimal, no certificate exists")
    n = witness.n
    if n % 2:
        ms = interference_channel_messages(witness)
        rate, source = Fraction(1, 2), "multicast"
    else:
        ms = cycle_unicast_messages(witness)
        rate, source = Fraction(1, 3), "alignment"
    claimed = {m: rate for m in ms}
    ortho = orthogonal_max_sum(g, ms, max_size=max(16, len(ms)))

    diagnostics = {}
    rp = build_region(g, ms)
    diagnostics["claimed_tuple_in_clique_region"] = contains(rp, claimed)
    if n % 2 == 0:
        diagnostics["alternative_claim"] = {
            "source": "blind alignment, arbitrary coherence",
            "sum": format_rational(Fraction(n + 1, 2)),
            "verified": False,
        }

    cert = SuboptimalityCertificate(witness, ms, claimed, source, ortho, diagnostics)
    if cert.gap <= 0:
        raise CertificateError(
            f"no gap on the length-{2 * n} cycle: orthogonal access reaches sum {ortho}, "
            f"the cited {source} tuple only {cert.claimed_sum}",
            n=n, claimed_sum=cert.claimed_sum, orthogonal_max_sum=ortho,
        )
    return cert
