"""Enumerate regions of random generic arrangements and compare with the closed-form counts."""
import argparse
import random
import time

from arrangeo.regions import count_formula, enumerate_regions, region_counts
from arrangeo.sampling import random_arrangement


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=3, help="arrangements per (m, n)")
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    print(f"seed {args.seed}")
    print(f"{'m':>2} {'n':>2}  {'formula':>14}  {'enumerated':>14}  seconds")
    for m in (2, 3):
        for n in range(m, args.max_n + 1):
            for _ in range(args.trials):
                arr = random_arrangement(rng, n, m)
                start = time.perf_counter()
                got = region_counts(enumerate_regions(arr))
                dt = time.perf_counter() - start
                want = count_formula(n, m)
                flag = "" if got == want else "  MISMATCH"
                print(f"{m:>2} {n:>2}  {str(want):>14}  {str(got):>14}  {dt:7.3f}{flag}")


if __name__ == "__main__":
    main()
