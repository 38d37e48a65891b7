"""Sweep a random corpus and tabulate chordality against scheduling outcomes.

Every topology gets its all-unicast region and a batch of random in-region
points.  On chordal instances each point must be schedulable; on non-chordal
ones we count how often the clique region overshoots orthogonal access.

    python3 scripts/chordal_sweep.py --count 300 --points 5 --seed 1
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from chordal_tim.analysis import is_chordal, is_perfect
from chordal_tim.corpus import random_point_in_region, random_topologies
from chordal_tim.errors import InfeasibleScheduleError
from chordal_tim.region import build_region, enumerate_vertices
from chordal_tim.scheduler import schedule, verify_schedule
from chordal_tim.topology import all_unicast


@dataclass
class Config:
    count: int = 300
    points: int = 5
    max_edges: int = 12
    seed: int = 1


def sweep(cfg: Config) -> Counter:
    rng = random.Random(cfg.seed)
    tally = Counter()
    for g in random_topologies(cfg.count, cfg.max_edges, seed=cfg.seed):
        ms = all_unicast(g)
        chordal = is_chordal(g)
        kind = "chordal" if chordal else "non-chordal"
        rp = build_region(g, ms)
        tally[kind, "topologies"] += 1
        tally[kind, "perfect"] += is_perfect(rp.conflict)
        if len(ms) <= 10:
            tally[kind, "integral region"] += all(v.is_integral() for v in enumerate_vertices(rp))
            tally[kind, "regions checked"] += 1
        for _ in range(cfg.points):
            r = random_point_in_region(rp, rng, boundary=rng.random() < 0.5)
            try:
                s = schedule(g, ms, r)
            except InfeasibleScheduleError:
                tally[kind, "infeasible points"] += 1
                continue
            tally[kind, "scheduled points"] += verify_schedule(g, ms, r, s)
    return tally


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(Config()).items():
        p.add_argument("--" + name.replace("_", "-"), type=int, default=default)
    cfg = Config(**vars(p.parse_args()))
    tally = sweep(cfg)
    keys = ["topologies", "perfect", "regions checked", "integral region", "scheduled points", "infeasible points"]
    print(f"{'':>18} {'chordal':>9} {'non-chordal':>12}")
    for k in keys:
        print(f"{k:>18} {tally['chordal', k]:>9} {tally['non-chordal', k]:>12}")


if __name__ == "__main__":
    main()
