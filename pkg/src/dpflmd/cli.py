"""Command-line experiment driver: mine, oracle, eval, sweep, gen-data."""

from __future__ import annotations

import argparse
import itertools
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from dpflmd.consolidated import ScoredMotif
from dpflmd.core import Alphabet, MiningParams
from dpflmd.io import (
    FORMATS,
    RunRecord,
    SyntheticSpec,
    generate_synthetic,
    load_dataset,
    ncfm_to_json,
    read_ncfm,
    write_dataset,
    write_results,
)
from dpflmd.metrics import EvalResult, aggregate_runs, confusion, evaluate, f1
from dpflmd.oracle import exact_mine
from dpflmd.server import run_mining

log = logging.getLogger("dpflmd")

DEFAULTS = {
    "format": "plain",
    "delta": 1,
    "lmin": 1,
    "lmax": 4,
    "topn": 30,
    "epsilon": 3.0,
    "xi": 0.01,
    "x": "0.5",
    "seed": 0,
    "reps": 100,
    "out": "results",
    "containment": "exact",
    "debias": False,
    "ambiguous": "reject",
    "jobs": 1,
}

SWEEP_AXES = ("epsilon", "xi", "x", "f")


class ConfigError(ValueError):
    pass


def resolve_x(value, n: int) -> int:
    """Absolute participant count, or a fraction of ``n`` when given as a float <= 1."""
    text = str(value).strip()
    try:
        if text.lstrip("+").isdigit():
            return int(text)
        frac = float(text)
    except ValueError as exc:
        raise ConfigError(f"x: cannot parse {value!r}") from exc
    if not 0 < frac <= 1:
        raise ConfigError(f"x: fractional value {value!r} must lie in (0, 1]")
    return max(1, int(frac * n))


def mix_seed(master: int, point: int, rep: int) -> int:
    ss = np.random.SeedSequence(master, spawn_key=(point, rep))
    return int(ss.generate_state(1, np.uint32)[0])


@dataclass
class ExperimentConfig:
    dataset: str
    format: str = "plain"
    f: float | None = None
    delta: int = 1
    lmin: int = 1
    lmax: int = 4
    topn: int = 30
    epsilon: float = 3.0
    xi: float = 0.01
    x: str = "0.5"
    seed: int = 0
    reps: int = 100
    out: str = "results"
    containment: str = "exact"
    debias: bool = False
    ambiguous: str = "reject"
    jobs: int = 1
    sweep: dict = field(default_factory=dict)  # axis -> list of values

    def __post_init__(self):
        if self.f is None:
            raise ConfigError("f: required (no default support threshold)")
        if self.reps < 1:
            raise ConfigError(f"reps: must be >= 1, got {self.reps}")
        for axis, values in self.sweep.items():
            if axis not in SWEEP_AXES:
                raise ConfigError(f"sweep: unknown axis {axis!r}")
            if not values:
                raise ConfigError(f"sweep-{axis}: empty axis")

    def points(self) -> list[dict]:
        """Cartesian product of the sweep axes, in axis declaration order."""
        axes = [a for a in SWEEP_AXES if a in self.sweep]
        return [dict(zip(axes, combo)) for combo in itertools.product(*(self.sweep[a] for a in axes))]

    def params_for(self, point: dict, n: int, seed: int) -> MiningParams:
        return MiningParams(
            f=float(point.get("f", self.f)),
            delta=int(self.delta),
            l_min=int(self.lmin),
            l_max=int(self.lmax),
            top_n=int(self.topn),
            epsilon=float(point.get("epsilon", self.epsilon)),
            xi=float(point.get("xi", self.xi)),
            x=resolve_x(point.get("x", self.x), n),
            seed=seed,
            containment=self.containment,
            debias=bool(self.debias),
        )


_TYPES = {
    "dataset": str, "format": str, "f": float, "delta": int, "lmin": int, "lmax": int, "topn": int,
    "epsilon": float, "xi": float, "x": str, "seed": int, "reps": int, "out": str, "containment": str,
    "ambiguous": str, "jobs": int,
}


def _parse_bool(text: str) -> bool:
    low = text.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _parse_list(text: str, typ) -> list:
    return [typ(v) for v in text.replace(",", " ").split()]


def read_config(path) -> dict:
    """Flat ``key = value`` file; keys mirror the long flag names."""
    out: dict = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.lstrip("-").replace("_", "-")
        try:
            if key == "debias":
                out["debias"] = _parse_bool(value)
            elif key.startswith("sweep-") and key[6:] in SWEEP_AXES:
                axis = key[6:]
                out.setdefault("sweep", {})[axis] = _parse_list(value, str if axis == "x" else float)
            elif key in _TYPES:
                out[key] = _TYPES[key](value)
            else:
                raise ConfigError(f"unknown key {key!r}")
        except (ValueError, TypeError) as exc:
            raise ConfigError(f"{path}:{lineno}: field {key!r}: {exc}") from exc
    return out


def _add_common(p: argparse.ArgumentParser) -> None:
    S = argparse.SUPPRESS
    p.add_argument("--config", default=S, help="flat key=value file; flags override it")
    p.add_argument("--dataset", default=S)
    p.add_argument("--format", choices=FORMATS, default=S)
    p.add_argument("--ambiguous", choices=("reject", "strip", "skip"), default=S,
                   help="handling of IUPAC ambiguity codes and gaps")
    p.add_argument("--verbose", "-v", action="store_true", default=S)
    p.add_argument("--f", type=float, default=S, help="support threshold (required)")
    p.add_argument("--delta", type=int, default=S)
    p.add_argument("--lmin", type=int, default=S)
    p.add_argument("--lmax", type=int, default=S)
    p.add_argument("--topn", type=int, default=S)
    p.add_argument("--epsilon", type=float, default=S)
    p.add_argument("--xi", type=float, default=S)
    p.add_argument("--x", default=S, help="participants per round: integer, or fraction of |D| like 0.5")
    p.add_argument("--seed", type=int, default=S)
    p.add_argument("--reps", type=int, default=S)
    p.add_argument("--out", default=S)
    p.add_argument("--containment", choices=("exact", "first-occurrence"), default=S)
    p.add_argument("--debias", action="store_true", default=S)
    p.add_argument("--jobs", type=int, default=S, help="worker processes for repetitions")
    for axis in SWEEP_AXES:
        p.add_argument(f"--sweep-{axis}", default=S, metavar="V1,V2,...")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dpflmd", description="Federated LDP DNA motif mining")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("mine", "single private mining run; prints NCFM"),
        ("oracle", "exact non-private ground truth"),
        ("sweep", "repeated runs over parameter sweeps, written to CSV + JSON"),
    ]:
        _add_common(sub.add_parser(name, help=help_))
    ev = sub.add_parser("eval", help="compare two NCFM JSON files")
    ev.add_argument("predicted")
    ev.add_argument("truth")
    gen = sub.add_parser("gen-data", help="write a synthetic planted-motif dataset")
    gen.add_argument("--num-records", type=int, required=True)
    gen.add_argument("--length", type=int, required=True)
    gen.add_argument("--motif", action="append", default=[], help="planted motif; repeatable")
    gen.add_argument("--plant-rate", type=float, default=0.0)
    gen.add_argument("--alphabet", default="ACGT")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True)
    return parser


def make_config(ns: argparse.Namespace) -> ExperimentConfig:
    values = dict(DEFAULTS)
    given = vars(ns)
    if "config" in given:
        values.update(read_config(given["config"]))
    sweep = dict(values.pop("sweep", {}))
    for key, val in given.items():
        if key in ("command", "config", "verbose"):
            continue
        if key.startswith("sweep_"):
            axis = key[6:]
            try:
                sweep[axis] = _parse_list(val, str if axis == "x" else float)
            except ValueError as exc:
                raise ConfigError(f"sweep-{axis}: {exc}") from exc
        else:
            values[key] = val
    if "dataset" not in values:
        raise ConfigError("dataset: required")
    return ExperimentConfig(sweep=sweep, **values)


def _one_run(args):
    dataset, params, truth_patterns, run_id, name = args
    t0 = time.perf_counter()
    res = run_mining(dataset, params)
    elapsed = time.perf_counter() - t0
    ev = evaluate(res.patterns, truth_patterns, elapsed)
    return RunRecord(
        run_id=run_id, dataset=name, f=params.f, delta=params.delta, l_min=params.l_min,
        l_max=params.l_max, N=params.top_n, epsilon=params.epsilon, xi=params.xi, x=params.x,
        seed=params.seed, precision=ev.precision, recall=ev.recall, f1=ev.f1,
        runtime_seconds=elapsed, total_budget=res.ledger.total, ncfm=res.ncfm,
    )


def run_experiment(config: ExperimentConfig, stream=None) -> tuple[list[RunRecord], int]:
    """Run every sweep point x repetition and write ``<out>/results.csv`` (+ .json).

    Returns the records and the number of failed runs.
    """
    stream = stream or sys.stdout
    dataset = load_dataset(config.dataset, config.format, ambiguous=config.ambiguous)
    name = Path(config.dataset).stem
    truths: dict = {}
    jobs = []
    for pi, point in enumerate(config.points()):
        for rep in range(config.reps):
            params = config.params_for(point, len(dataset), mix_seed(config.seed, pi, rep))
            key = (params.f, params.delta, params.l_min, params.l_max, params.top_n)
            if key not in truths:
                truths[key] = exact_mine(dataset, params).patterns
            jobs.append((pi, rep, (dataset, params, truths[key], len(jobs), name)))

    records: list[RunRecord] = []
    by_point: dict = {}
    failures = 0

    def collect(pi, rep, fn):
        nonlocal failures
        try:
            rec = fn()
        except Exception as exc:  # noqa: BLE001 - one bad run must not lose the others
            failures += 1
            log.error("point %d rep %d failed: %s", pi, rep, exc)
            return
        records.append(rec)
        by_point.setdefault(pi, []).append(EvalResult(rec.precision, rec.recall, rec.f1, rec.runtime_seconds))

    if config.jobs > 1:
        with ProcessPoolExecutor(config.jobs) as pool:
            futures = [(pi, rep, pool.submit(_one_run, a)) for pi, rep, a in jobs]
            for pi, rep, fut in futures:
                collect(pi, rep, fut.result)
    else:
        for pi, rep, a in jobs:
            collect(pi, rep, lambda a=a: _one_run(a))

    records.sort(key=lambda r: r.run_id)
    out = Path(config.out) / "results.csv"
    write_results(records, out)
    for pi, point in enumerate(config.points()):
        if pi not in by_point:
            print(f"point {pi} {point}: all runs failed", file=stream)
            continue
        agg = aggregate_runs(by_point[pi])
        (m_f1, s_f1), (m_rt, s_rt) = agg["f1"], agg["runtime_seconds"]
        label = " ".join(f"{k}={v}" for k, v in point.items()) or "defaults"
        print(f"[{label}] F1 {m_f1:.4f} +- {s_f1:.4f}  runtime {m_rt:.4f}s +- {s_rt:.4f}s  (n={len(by_point[pi])})",
              file=stream)
    print(f"wrote {out}", file=stream)
    return records, failures


def _print_ncfm(ncfm, stream=None) -> None:
    stream = stream or sys.stdout
    for rank, m in enumerate(ncfm, 1):
        print(f"{rank:3d}  {m.pattern:<12s} cf={m.cf:.6f}  freq={m.noisy_frequency:.6f}", file=stream)


def _write_json(path, doc) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Path(path).write_text(json.dumps(doc, indent=1) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if getattr(ns, "verbose", False) else logging.WARNING,
        format="%(message)s",
        stream=sys.stderr,
    )
    try:
        if ns.command == "gen-data":
            spec = SyntheticSpec(
                ns.num_records, ns.length, alphabet=Alphabet.from_string(ns.alphabet),
                planted_motif=tuple(ns.motif) or None, plant_rate=ns.plant_rate, seed=ns.seed,
            )
            write_dataset(generate_synthetic(spec), ns.out)
            return 0
        if ns.command == "eval":
            pred = {m["pattern"] for m in read_ncfm(ns.predicted)}
            truth = {m["pattern"] for m in read_ncfm(ns.truth)}
            c = confusion(pred, truth)
            print(f"tp={c.tp} fp={c.fp} fn={c.fn} precision={c.precision:.6f} recall={c.recall:.6f} f1={f1(c):.6f}")
            return 0

        config = make_config(ns)
        if ns.command == "sweep":
            _, failures = run_experiment(config)
            return 1 if failures else 0

        dataset = load_dataset(config.dataset, config.format, ambiguous=config.ambiguous)
        params = config.params_for({}, len(dataset), config.seed)
        if ns.command == "oracle":
            gt = exact_mine(dataset, params)
            ncfm: list[ScoredMotif] = gt.ncfm
        else:
            res = run_mining(dataset, params)
            ncfm = res.ncfm
            log.info("total epsilon spent: %.6g (max per client %.6g)", res.ledger.total, res.ledger.max_spend)
        _print_ncfm(ncfm)
        if "out" in vars(ns):
            _write_json(ns.out, {"params": asdict(params), "ncfm": ncfm_to_json(ncfm)})
        return 0
    except (ValueError, OSError) as exc:
        print(f"dpflmd: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
