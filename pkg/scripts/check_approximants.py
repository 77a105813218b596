#!/usr/bin/env python3
"""Compare three descriptions of the convergents of square roots.

For each surd x the script lists, over all ∞-rationals u with small
denominator near x, whether u is a convergent of the EICF of x, whether u
is a strong ∞-approximant (brute force), and whether a 1-rational Farey
neighbour of u puts x strictly between them. All three columns should agree.
"""
import argparse
import math
import time

from fareytree.approx import convergent_certificate, is_strong_approximant
from fareytree.eicf import convergents, expand_approx
from fareytree.errors import Undecidable
from fareytree.exact import sqrt_approx
from fareytree.farey import enumerate_inf_rationals


def check(n, digits, max_den):
    x = sqrt_approx(n, digits)
    s = expand_approx(x, 60, strict=False)
    convs = {u for u in convergents(s, len(s)) if u.den <= max_den}
    bad = undecided = total = 0
    for u in enumerate_inf_rationals(max_den, x.mid - 2, x.mid + 2):
        total += 1
        try:
            strong = is_strong_approximant(u, x)
            cert = convergent_certificate(u, x) is not None
        except Undecidable:
            undecided += 1
            continue
        bad += not (strong == cert == (u in convs))
    return total, len(convs), bad, undecided


def main():
    parser = argparse.ArgumentParser(description="strong approximants vs convergents for square roots")
    parser.add_argument("--digits", type=int, default=60)
    parser.add_argument("--max-den", type=int, default=30)
    parser.add_argument("--limit", type=int, default=50, help="largest radicand")
    args = parser.parse_args()

    print(f"{'n':>4} {'candidates':>10} {'convergents':>11} {'mismatch':>8} {'undecided':>9}")
    t0 = time.perf_counter()
    mismatches = 0
    for n in range(2, args.limit + 1):
        if math.isqrt(n) ** 2 == n:
            continue
        total, nconv, bad, und = check(n, args.digits, args.max_den)
        mismatches += bad
        print(f"{n:>4} {total:>10} {nconv:>11} {bad:>8} {und:>9}")
    print(f"total mismatches: {mismatches}  ({time.perf_counter() - t0:.1f}s)")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
