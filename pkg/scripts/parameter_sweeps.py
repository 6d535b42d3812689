"""Epsilon, xi and participant-count sweeps on a planted-motif dataset.

Writes one CSV/JSON pair per axis under ``--out`` and prints mean F1 per point.
Defaults mirror the small-dataset regime: delta=1, xi=0.01, eps=3, x=|D|/2, N=30.
"""

import argparse
from pathlib import Path

from dpflmd.cli import ExperimentConfig, run_experiment
from dpflmd.io import SyntheticSpec, generate_synthetic, write_dataset

MOTIFS = ("ACGTA", "TTGCA", "GATCC", "CAGTG", "TGACT")

AXES = {
    "epsilon": [0.5, 1, 2, 3, 4, 5],
    "xi": [0.001, 0.01, 0.05, 0.1, 0.2],
    "x": ["0.1", "0.2", "0.3", "0.4", "0.5"],
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--records", type=int, default=500)
    ap.add_argument("--length", type=int, default=20)
    ap.add_argument("--plant-rate", type=float, default=0.5)
    ap.add_argument("--f", type=float, default=0.4)
    ap.add_argument("--lmax", type=int, default=5)
    ap.add_argument("--reps", type=int, default=100)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="results/sweeps")
    args = ap.parse_args()

    out = Path(args.out)
    data = out / "planted.txt"
    spec = SyntheticSpec(args.records, args.length, planted_motif=MOTIFS, plant_rate=args.plant_rate, seed=args.seed)
    write_dataset(generate_synthetic(spec), data)

    for axis, values in AXES.items():
        print(f"== {axis} ==")
        cfg = ExperimentConfig(
            dataset=str(data), f=args.f, lmax=args.lmax, reps=args.reps, seed=args.seed,
            jobs=args.jobs, out=str(out / axis), sweep={axis: values},
        )
        run_experiment(cfg)


if __name__ == "__main__":
    main()
