"""Confusion counts, F1 and multi-run aggregation."""

from __future__ import annotations

import statistics
from dataclasses import dataclass, fields


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    fp: int
    fn: int
    tn: int | None = None

    @property
    def precision(self) -> float:
        return self.tp / (self.tp + self.fp) if self.tp + self.fp else 0.0

    @property
    def recall(self) -> float:
        return self.tp / (self.tp + self.fn) if self.tp + self.fn else 0.0


@dataclass(frozen=True)
class EvalResult:
    precision: float
    recall: float
    f1: float
    runtime_seconds: float = 0.0


def confusion(predicted, truth, universe=None) -> ConfusionCounts:
    predicted, truth = set(predicted), set(truth)
    tn = None
    if universe is not None:
        tn = len(set(universe) - predicted - truth)
    return ConfusionCounts(len(predicted & truth), len(predicted - truth), len(truth - predicted), tn)


def f1(counts: ConfusionCounts) -> float:
    p, r = counts.precision, counts.recall
    if p + r == 0:
        return 0.0
    return 2 * p * r / (p + r)


def evaluate(predicted, truth, runtime_seconds: float = 0.0) -> EvalResult:
    c = confusion(predicted, truth)
    return EvalResult(c.precision, c.recall, f1(c), runtime_seconds)


def aggregate_runs(results) -> dict:
    """Mean and sample stddev per EvalResult field: {name: (mean, stddev)}."""
    results = list(results)
    if not results:
        raise ValueError("no results to aggregate")
    out = {}
    for fld in fields(EvalResult):
        vals = [getattr(r, fld.name) for r in results]
        sd = statistics.stdev(vals) if len(vals) > 1 else 0.0
        out[fld.name] = (statistics.fmean(vals), sd)
    return out
