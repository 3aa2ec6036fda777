"""Walk the offsets of one arrangement to the cone of another by crossing facets.

Both arrangements share their normals; every step crosses a facet of the
current cone that separates it from the target, so the walk length equals
the number of differing concurrency signs.
"""
import argparse
import random

from arrangeo.arriso import is_isomorphism
from arrangeo.concurr import cone_facets, cone_signature, cross_facet
from arrangeo.sampling import random_arrangement, random_offsets_for


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("-m", type=int, default=2)
    ap.add_argument("-n", type=int, default=6)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    arr = random_arrangement(rng, args.n, args.m)
    target = random_offsets_for(rng, arr.normals)
    goal = cone_signature(target).signs
    print(f"seed {args.seed}; start b = {[str(b) for b in arr.offsets]}")
    step = 0
    while True:
        signs = cone_signature(arr).signs
        wrong = [S for S in signs if signs[S] != goal[S]]
        print(f"step {step}: {len(wrong)} signs differ")
        if not wrong:
            break
        S = next(S for S in cone_facets(arr) if S in wrong)
        arr = cross_facet(arr, S)
        step += 1
        print(f"  crossed {S}")
    print(f"identity isomorphism with target: {bool(is_isomorphism(arr, target, range(1, arr.n + 1)))}")


if __name__ == "__main__":
    main()
