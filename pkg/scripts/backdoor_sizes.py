"""Tabulate minimum strong and deletion backdoor sizes on random programs."""

import argparse
import collections

from parity_backdoors import DELETION, STRONG, ClassId, detect_backdoor
from parity_backdoors.generators import random_program


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--atoms", type=int, default=6)
    ap.add_argument("--rules", type=int, default=8)
    ap.add_argument("--neg-prob", type=float, default=0.4)
    ap.add_argument("--samples", type=int, default=40)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    programs = [
        random_program(args.atoms, args.rules, args.neg_prob, seed=args.seed + i) for i in range(args.samples)
    ]
    print(f"{'class':8s} {'mode':8s} mean  max  gap")
    for target in ClassId:
        sizes = {}
        for mode in (STRONG, DELETION):
            sizes[mode] = [detect_backdoor(p, target, len(p.atoms), mode).size for p in programs]
        # strong backdoors are never larger than deletion ones
        gaps = collections.Counter(d - s for s, d in zip(sizes[STRONG], sizes[DELETION]))
        for mode, vals in sizes.items():
            gap = dict(sorted(gaps.items())) if mode == DELETION else ""
            print(f"{target!s:8s} {mode:8s} {sum(vals) / len(vals):4.2f}  {max(vals):3d}  {gap}")


if __name__ == "__main__":
    main()
