"""Orthogonal-access sum rate on cyclic networks versus the cited coding tuples.

For each n the script builds the length-2n cycle, picks the interference-channel
messages (odd n) or all 2n unicast messages (even n), and prints the independence
number next to the claimed achievable sum.  Rows with gap <= 0 are where no
certificate can be issued.

    python3 scripts/necessity_table.py --max-n 12
"""

import argparse
from dataclasses import dataclass
from fractions import Fraction

from chordal_tim.analysis import find_chordless_long_cycle
from chordal_tim.converse import cycle_unicast_messages, interference_channel_messages, orthogonal_max_sum
from chordal_tim.topology import gen_cycle


@dataclass
class Config:
    min_n: int = 3
    max_n: int = 10
    # exact independence search; 2n messages for even n
    max_size: int = 24


def rows(cfg: Config):
    for n in range(cfg.min_n, cfg.max_n + 1):
        g = gen_cycle(n)
        w = find_chordless_long_cycle(g)
        if n % 2:
            ms, claimed, formula = interference_channel_messages(w), Fraction(n, 2), Fraction(n - 1, 2)
        else:
            ms, claimed, formula = cycle_unicast_messages(w), Fraction(2 * n, 3), Fraction(n, 2)
        alpha = orthogonal_max_sum(g, ms, max_size=cfg.max_size)
        yield n, len(ms), alpha, formula, claimed, claimed - alpha


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--min-n", type=int, default=Config.min_n)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    cfg = Config(**{k: v for k, v in vars(p.parse_args()).items()})
    print(f"{'n':>3} {'msgs':>5} {'alpha':>6} {'formula':>8} {'claimed':>8} {'gap':>6}")
    for n, k, alpha, formula, claimed, gap in rows(cfg):
        flag = "" if alpha == formula else "  <- alpha differs from (n-1)/2 or n/2"
        print(f"{n:>3} {k:>5} {str(alpha):>6} {str(formula):>8} {str(claimed):>8} {str(gap):>6}{flag}")


if __name__ == "__main__":
    main()
