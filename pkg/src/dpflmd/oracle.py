"""Exact, non-private ground truth and brute-force verifiers."""

from __future__ import annotations

import math
from dataclasses import dataclass

from dpflmd.candidates import generate_candidates
from dpflmd.consolidated import ScoredMotif, hamming, top_n
from dpflmd.core import Dataset, MiningParams


@dataclass(frozen=True)
class GroundTruth:
    frequent_by_length: dict  # l -> {pattern: exact support}
    ncfm: list  # list[ScoredMotif]

    @property
    def patterns(self) -> set[str]:
        return {m.pattern for m in self.ncfm}


def brute_force_cf(supports: dict, delta: int) -> dict:
    """All-pairs consolidated frequency for one length class."""
    items = sorted(supports.items())
    lengths = {len(p) for p, _ in items}
    if len(lengths) > 1:
        raise ValueError("patterns must share one length")
    cf = {}
    for p1, s1 in items:
        terms = [s1] + [s2 for p2, s2 in items if p2 != p1 and hamming(p1, p2) <= delta]
        cf[p1] = math.fsum(terms)
    return cf


def exact_mine(dataset: Dataset, params: MiningParams) -> GroundTruth:
    """Levelwise Apriori with exact supports; privacy and sampling fields are ignored."""
    n = len(dataset)
    seqs = [r.data for r in dataset.records]
    frequent_by_length: dict = {}
    F_prev: dict = {}
    for l in range(params.l_min, params.l_max + 1):
        cs = generate_candidates(F_prev, params.l_min, l, dataset.alphabet)
        F_l = {}
        for cand in cs.candidates:
            s = sum(1 for d in seqs if cand in d) / n
            if s >= params.f:
                F_l[cand] = s
        if F_l:
            frequent_by_length[l] = F_l
        F_prev = F_l
    scored = []
    for l, sup in frequent_by_length.items():
        cf = brute_force_cf(sup, params.delta)
        scored.extend(ScoredMotif(p, sup[p], cf[p]) for p in sup)
    return GroundTruth(frequent_by_length, top_n(scored, params.top_n))
