#!/usr/bin/env python3
"""Measure where random non-conjugate word pairs separate along the chain.

For each pair the theory predicts separation once 2^(level-1) exceeds the
total absolute exponent of the distinguished generator in both words; the
sweep tabulates how tight that bound is in practice.
"""

import argparse
import random
import sys
from collections import Counter

from goldmanab.chain import separation_level, total_c_exponent
from goldmanab.words import are_conjugate, reduce_word


def random_word(rng, n, c, max_runs):
    raw = []
    for _ in range(rng.randint(0, max_runs)):
        gen = rng.randint(1, n)
        if gen == c and rng.random() < 0.4:
            exp = (1 if rng.random() < 0.5 else -1) * (1 << rng.randint(0, 4))
        else:
            exp = rng.choice([-3, -2, -1, 1, 2, 3])
        raw.append((gen, exp))
    return reduce_word(raw, n)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, required=True)
    parser.add_argument("--pairs", type=int, default=2000)
    parser.add_argument("--alphabet", type=int, default=3)
    parser.add_argument("--c", type=int, default=1)
    parser.add_argument("--max-budget", type=int, default=32)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    slack = Counter()
    done = 0
    while done < args.pairs:
        a = random_word(rng, args.alphabet, args.c, 5)
        b = random_word(rng, args.alphabet, args.c, 5)
        budget = total_c_exponent(a, args.c) + total_c_exponent(b, args.c)
        if budget > args.max_budget or are_conjugate(a, b):
            continue
        done += 1
        bound = 0
        while (1 << bound) <= 2 * budget:
            bound += 1
        level = separation_level(a, b, args.c, bound)
        if level is None:
            print(f"BOUND VIOLATED: a={a} b={b} budget={budget}")
            return 1
        slack[bound - level] += 1

    print(f"{args.pairs} non-conjugate pairs, c = a{args.c}, alphabet size {args.alphabet}")
    print("slack = (guaranteed bound) - (observed least separating level)")
    for gap in sorted(slack):
        print(f"  slack {gap:2d}: {slack[gap]:6d} pairs")
    return 0


if __name__ == "__main__":
    sys.exit(main())
