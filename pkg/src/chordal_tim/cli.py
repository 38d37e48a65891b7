"""Command-line front end.

Exit codes: 0 success (chordal), 10 topology not chordal, 11 no orthogonal
schedule fits the requested rates, 12 no positive orthogonal-access gap for
the cited tuple, 2 input error, 3 desk-scale size limit exceeded,
4 precondition not met (e.g. ``certify`` on a chordal topology),
1 a verification found a counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import analysis, converse, demand, onedim, region, scheduler
from .errors import (
    CertificateError,
    ChordalTopologyError,
    InfeasibleScheduleError,
    KeyMismatchError,
    NotChordalError,
    SizeLimitError,
    TopologyError,
)
from .rational import format_rational
from .topology import (
    LineLayout,
    gen_convex1d,
    gen_cycle,
    gen_random,
    parse_message_set,
    parse_rates,
    parse_topology,
    topology_to_dict,
)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INPUT = 2
EXIT_SIZE = 3
EXIT_PRECONDITION = 4
EXIT_NOT_CHORDAL = 10
EXIT_INFEASIBLE = 11
EXIT_NO_GAP = 12


class CLIError(Exception):
    def __init__(self, code, message, payload=None):
        super().__init__(message)
        self.code = code
        self.payload = payload


@dataclass
class AnalysisReport:
    chordal: bool
    conflict_stats: dict
    witness: analysis.ChordlessCycleWitness | None = None
    region: dict | None = None
    certificate: dict | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        doc = {"chordal": self.chordal}
        if self.witness is not None:
            doc["witness"] = dict(self.witness.to_dict(), length=self.witness.length)
        doc["conflict_stats"] = self.conflict_stats
        if self.region is not None:
            doc["region"] = self.region
        if self.certificate is not None:
            doc["certificate"] = self.certificate
        doc.update(self.extra)
        return doc


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CLIError(EXIT_INPUT, f"cannot read {path}: {exc.strerror}") from None


def _load(args):
    g = parse_topology(_read(args.topology))
    msgs = _read(args.messages) if getattr(args, "messages", None) else None
    return g, parse_message_set(msgs, g)


def _check_size(n: int, args) -> None:
    if args.max_size is not None and n > args.max_size:
        raise SizeLimitError(f"{n} messages exceeds --max-size {args.max_size}")


def cmd_analyze(args):
    g, ms = _load(args)
    _check_size(len(ms), args)
    cg = analysis.conflict_graph(g, ms)
    witness = analysis.find_chordless_long_cycle(g)
    stats = {
        "vertices": len(cg),
        "edges": cg.num_edges(),
        "clique_count": len(analysis.maximal_cliques(cg)),
        "clique_number": analysis.clique_number(cg),
        "independence_number": analysis.independence_number(cg),
        "chromatic_number": analysis.chromatic_number(cg),
    }
    report = AnalysisReport(witness is None, stats, witness)
    rp = region.build_region(g, ms, all_cliques=args.all_cliques)
    report.region = {"inequalities": len(rp.inequalities), "valid_capacity_region": rp.chordal}
    if witness is None:
        report.extra["symmetric_capacity"] = format_rational(region.symmetric_capacity(g, ms))
        report.extra["sum_capacity"] = format_rational(region.sum_capacity(g, ms))
    elif args.certify:
        try:
            report.certificate = converse.certify_suboptimality(g).to_dict()
        except CertificateError as exc:
            report.certificate = {"error": str(exc)}
    return report.to_dict(), EXIT_OK if witness is None else EXIT_NOT_CHORDAL


def cmd_region(args):
    g, ms = _load(args)
    _check_size(len(ms), args)
    rp = region.build_region(g, ms, all_cliques=args.all_cliques)
    doc = rp.to_dict()
    if args.vertices:
        limit = args.max_size if args.max_size is not None else region.VERTEX_LIMIT
        verts = region.enumerate_vertices(rp, max_size=limit)
        doc["vertices"] = [v.to_json() for v in verts]
        doc["integral"] = all(v.is_integral() for v in verts)
    return doc, EXIT_OK if rp.chordal else EXIT_NOT_CHORDAL


def cmd_schedule(args):
    g, ms = _load(args)
    rates = parse_rates(_read(args.rates), ms)
    limit = args.max_size if args.max_size is not None else scheduler.SCHEDULE_LIMIT
    rp = region.build_region(g, ms)
    in_region = region.contains(rp, rates)
    try:
        s = scheduler.schedule(g, ms, rates, exact=not args.allow_surplus, max_size=limit)
    except InfeasibleScheduleError as exc:
        payload = {
            "error": "infeasible",
            "chordal": rp.chordal,
            "in_clique_region": in_region,
            "min_total_weight": format_rational(exc.min_total_weight),
            "gap": format_rational(exc.gap),
        }
        raise CLIError(EXIT_INFEASIBLE, str(exc), payload) from None
    doc = s.to_dict()
    surplus = s.over_delivery(rates)
    if surplus:
        doc["over_delivery"] = [
            [m.source, m.destination, format_rational(v)] for m, v in sorted(surplus.items())
        ]
    return doc, EXIT_OK


def cmd_certify(args):
    g, _ = _load(args)
    try:
        cert = converse.certify_suboptimality(g)
    except CertificateError as exc:
        payload = {
            "error": "no_gap",
            "n": exc.n,
            "claimed_sum": format_rational(exc.claimed_sum),
            "orthogonal_max_sum": format_rational(exc.orthogonal_max_sum),
        }
        raise CLIError(EXIT_NO_GAP, str(exc), payload) from None
    return cert.to_dict(), EXIT_OK


def cmd_gen(args):
    if args.kind == "cycle":
        g = gen_cycle(args.n)
        return topology_to_dict(g), EXIT_OK
    if args.kind == "convex1d":
        g, layout = gen_convex1d(args.seed, args.m, args.n)
        if args.layout_out:
            with open(args.layout_out, "w", encoding="utf-8") as fh:
                json.dump(layout.to_dict(), fh)
                fh.write("\n")
        return topology_to_dict(g), EXIT_OK
    g = gen_random(args.seed, args.m, args.n, args.p)
    return topology_to_dict(g), EXIT_OK


def cmd_verify(args):
    g = parse_topology(_read(args.topology))
    doc = {}
    code = EXIT_OK
    limit = args.max_size if args.max_size is not None else demand.CLIQUE_CHECK_LIMIT
    try:
        rep = demand.verify_clique_acyclicity(g, max_size=limit)
        doc["clique_acyclicity"] = rep.to_dict()
        if not rep.passed:
            code = EXIT_COUNTEREXAMPLE
    except NotChordalError as exc:
        doc["clique_acyclicity"] = {
            "status": "not applicable",
            "checked_cliques": 0,
            "reason": "topology not chordal",
            "witness": exc.witness.to_dict(),
        }
        code = EXIT_NOT_CHORDAL
    if args.layout:
        try:
            layout = LineLayout.from_dict(json.loads(_read(args.layout)))
        except json.JSONDecodeError as exc:
            raise TopologyError(f"malformed layout document: {exc}") from None
        rep = onedim.convexity_implies_chordal_check(g, layout)
        doc["convexity"] = rep.to_dict()
        if rep.status == "fail":
            code = EXIT_COUNTEREXAMPLE
    return doc, code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordal-tim",
        description="Chordality, capacity regions and orthogonal-access schedules for index coding / TIM topologies.",
    )
    fmt = argparse.ArgumentParser(add_help=False)
    out = fmt.add_mutually_exclusive_group()
    out.add_argument("--json", dest="pretty", action="store_false", help="compact JSON (default)")
    out.add_argument("--pretty", dest="pretty", action="store_true", help="indented JSON")
    fmt.add_argument("--max-size", type=int, default=None, help="cap on messages for exact searches")
    fmt.set_defaults(pretty=False)

    topo = argparse.ArgumentParser(add_help=False)
    topo.add_argument("topology", help="topology JSON file")
    topo.add_argument("--messages", help="message-set JSON file (default: all-unicast)")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[topo, fmt], help="chordality and conflict-graph statistics")
    p.add_argument("--certify", action="store_true", help="attach a suboptimality certificate if not chordal")
    p.add_argument("--all-cliques", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("region", parents=[topo, fmt], help="clique-inequality rate region")
    p.add_argument("--all-cliques", action="store_true", help="emit every clique inequality, not only maximal ones")
    p.add_argument("--vertices", action="store_true", help="also enumerate the region's vertices")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("schedule", parents=[topo, fmt], help="orthogonal-access schedule for a rate tuple")
    p.add_argument("--rates", required=True, help="rates JSON file (exact rational strings)")
    p.add_argument("--allow-surplus", action="store_true", help="keep LP over-delivery instead of trimming it")
    p.set_defaults(func=cmd_schedule)

    p = sub.add_parser("certify", parents=[topo, fmt], help="orthogonal-access suboptimality certificate")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("gen", parents=[fmt], help="generate a topology")
    p.add_argument("kind", choices=["cycle", "convex1d", "random"])
    p.add_argument("--n", type=int, required=True, help="cycle size, or number of destinations")
    p.add_argument("--m", type=int, default=None, help="number of sources (convex1d, random)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.4, help="edge probability (random)")
    p.add_argument("--layout-out", help="write the convex1d line layout here")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", parents=[fmt], help="clique/demand-graph acyclicity and convexity checks")
    p.add_argument("topology", help="topology JSON file")
    p.add_argument("--layout", help="layout JSON file for the convexity check")
    p.set_defaults(func=cmd_verify)
    return parser


def _emit(doc, pretty: bool, stream) -> None:
    if pretty:
        stream.write(json.dumps(doc, indent=2) + "\n")
    else:
        stream.write(json.dumps(doc, separators=(",", ":")) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "gen" and args.kind != "cycle" and args.m is None:
        args.m = args.n
    try:
        doc, code = args.func(args)
    except CLIError as exc:
        if exc.payload is not None:
            _emit(exc.payload, args.pretty, sys.stdout)
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (ChordalTopologyError, NotChordalError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (TopologyError, KeyMismatchError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(doc, args.pretty, sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
