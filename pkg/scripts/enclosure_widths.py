#!/usr/bin/env python3
"""Print how fast the Farey enclosures of an EICF shrink.

    python scripts/enclosure_widths.py "[2,-2,4,-2,4,-2,4,-2,4,-2,4,-2]"
    python scripts/enclosure_widths.py --random 40 --seed 7
"""
import argparse
import random

from fareytree.eicf import EicfSeq, enclosure, format_eicf, parse_eicf


def main():
    parser = argparse.ArgumentParser(description="enclosure widths along an EICF")
    parser.add_argument("eicf", nargs="?", help="EICF literal")
    parser.add_argument("--random", type=int, metavar="N", help="use N random terms instead")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    if args.random:
        rng = random.Random(args.seed)
        terms = [2 * rng.randint(-4, 4)] + [rng.choice([-1, 1]) * 2 * rng.randint(1, 4) for _ in range(args.random - 1)]
        s = EicfSeq(tuple(terms))
    elif args.eicf:
        s = parse_eicf(args.eicf)
    else:
        parser.error("give an EICF literal or --random N")
    print(format_eicf(s))
    # a tailed sequence never runs out; show ten enclosures past the explicit terms
    last = len(s) - 1 if s.is_finite else len(s) + 10
    for n in range(1, last + 1):
        e = enclosure(s, n)
        print(f"{n:>3}  [{e.lo}, {e.hi}]  width {float(e.width):.3e}")


if __name__ == "__main__":
    main()
