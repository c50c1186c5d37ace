#!/usr/bin/env python3
"""Sweep random defining matrices of every rank, tabulate the classifier's
case labels and Gorenstein verdicts, and crosscheck each prediction against
the computed cohomology.

Usage: python scripts/classification_sweep.py [--per-rank N] [--seed S]
"""

import argparse
import random
from collections import Counter

from dgskew import QQ, crosscheck
from dgskew.sampling import random_rank


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--per-rank", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-degree", type=int, default=6)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    labels = Counter()
    verdicts = Counter()
    divergences = []
    for rank in (0, 1, 2, 3):
        for _ in range(args.per_rank if rank in (1, 2, 3) else 1):
            M = random_rank(QQ, rng, rank)
            report = crosscheck(M, args.max_degree)
            c = report.classification
            labels[c.case_label] += 1
            verdicts[c.predicted_gorenstein] += 1
            bad = [p for p in report.failures()]
            status = "ok" if report.ok else ",".join(p.name for p in bad)
            print(f"rank {rank}  {c.case_label:<22} {c.predicted_gorenstein:<14} "
                  f"dims {report.computed_dims}  [{status}]")
            if bad:
                divergences.append((M, bad))

    print("\nlabels:  ", dict(sorted(labels.items())))
    print("verdicts:", dict(sorted(verdicts.items())))
    if divergences:
        print(f"\n{len(divergences)} prediction divergence(s):")
        for M, bad in divergences:
            for p in bad:
                print(f"  {M}: {p.name}: {p.detail}")
    else:
        print("\nno divergences: every prediction matched the computation")


if __name__ == "__main__":
    main()
