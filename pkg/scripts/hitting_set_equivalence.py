"""Compare hitting-set answers with backdoor detection on the gadget programs."""

import argparse
import itertools
import time

from parity_backdoors import STRONG, ClassId, detect_backdoor
from parity_backdoors.generators import (
    DIRECTED,
    UNDIRECTED,
    HittingSetInstance,
    brute_force_hitting_set,
    gen_hitting_set_program,
)

TARGETS = [(DIRECTED, ClassId.NO_DEC), (UNDIRECTED, ClassId.NO_EC), (UNDIRECTED, ClassId.NO_BEC)]


def families(ground, max_sets):
    subsets = [frozenset(c) for r in range(1, len(ground) + 1) for c in itertools.combinations(ground, r)]
    for m in range(1, max_sets + 1):
        yield from itertools.combinations(subsets, m)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ground", type=int, default=3)
    ap.add_argument("--max-sets", type=int, default=3)
    ap.add_argument("--max-k", type=int, default=2)
    args = ap.parse_args()
    ground = range(1, args.ground + 1)
    for variant, target in TARGETS:
        start = time.perf_counter()
        total = mismatches = yes = 0
        for fam in families(ground, args.max_sets):
            for k in range(args.max_k + 1):
                inst = HittingSetInstance(fam, k)
                want = brute_force_hitting_set(inst) is not None
                got = detect_backdoor(gen_hitting_set_program(inst, variant), target, k, STRONG) is not None
                total += 1
                yes += want
                mismatches += want != got
        elapsed = time.perf_counter() - start
        print(f"{variant:10s} {target!s:7s} instances={total} yes={yes} mismatches={mismatches} time={elapsed:.1f}s")


if __name__ == "__main__":
    main()
