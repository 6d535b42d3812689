"""Compare private mining in its zero-noise limit against the exact oracle on random datasets."""

import argparse
import time

from dpflmd.core import MiningParams
from dpflmd.io import SyntheticSpec, generate_synthetic
from dpflmd.oracle import exact_mine
from dpflmd.server import run_mining


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--datasets", type=int, default=50)
    ap.add_argument("--records", type=int, default=200)
    ap.add_argument("--length", type=int, default=50)
    ap.add_argument("--f", type=float, default=0.3)
    args = ap.parse_args()

    t0 = time.perf_counter()
    mismatches = 0
    for i in range(args.datasets):
        ds = generate_synthetic(SyntheticSpec(args.records, args.length, seed=i))
        params = MiningParams(f=args.f, delta=1, l_min=1, l_max=4, top_n=30, epsilon=50, xi=1.0, x=len(ds), seed=i)
        got = [(m.pattern, m.cf) for m in run_mining(ds, params).ncfm]
        want = [(m.pattern, m.cf) for m in exact_mine(ds, params).ncfm]
        if got != want:
            mismatches += 1
            print(f"dataset {i}: mismatch")
    print(f"{args.datasets - mismatches}/{args.datasets} identical in {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
