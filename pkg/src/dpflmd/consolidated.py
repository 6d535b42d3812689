"""Consolidated frequency scoring with reference-distance buckets, and top-N selection."""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass


@dataclass(frozen=True)
class ScoredMotif:
    pattern: str
    noisy_frequency: float
    cf: float

    def to_dict(self) -> dict:
        return {"pattern": self.pattern, "noisy_frequency": self.noisy_frequency, "cf": self.cf}


@dataclass(frozen=True)
class HammingBuckets:
    reference: str
    buckets: dict  # distance -> list of patterns

    def bucket_of(self, pattern: str) -> int:
        return hamming(self.reference, pattern)


def hamming(s: str, p: str) -> int:
    if len(s) != len(p):
        raise ValueError(f"length mismatch: {s!r} vs {p!r}")
    return sum(a != b for a, b in zip(s, p))


def is_approximate(s: str, p: str, delta: int) -> bool:
    """Distinct equal-length patterns within ``delta`` mismatches."""
    return hamming(s, p) <= delta and s != p


def bucketize(patterns) -> HammingBuckets:
    """File each pattern under its distance from the lexicographically first one."""
    ordered = sorted(patterns)
    if not ordered:
        raise ValueError("cannot bucketize an empty pattern set")
    l = len(ordered[0])
    if any(len(p) != l for p in ordered):
        raise ValueError("patterns must share one length")
    ref = ordered[0]
    buckets = defaultdict(list)
    for p in ordered:
        buckets[hamming(ref, p)].append(p)
    return HammingBuckets(ref, dict(buckets))


def length_cf(freqs: dict, delta: int) -> dict:
    """cf for one length class. Neighbour search is confined to buckets
    ``[i - delta, i + delta]`` around the pattern's own bucket ``i``, which is
    lossless by the triangle inequality on the reference distance."""
    if not freqs:
        return {}
    hb = bucketize(freqs)
    l = len(hb.reference)
    cf = {}
    for i, members in hb.buckets.items():
        lo, hi = max(0, i - delta), min(i + delta, l)
        for p1 in members:
            terms = [freqs[p1]]
            for j in range(lo, hi + 1):
                for p2 in hb.buckets.get(j, ()):
                    if p2 != p1 and hamming(p1, p2) <= delta:
                        terms.append(freqs[p2])
            # fsum is exactly rounded, so the result is independent of visit order
            cf[p1] = math.fsum(terms)
    return cf


def consolidated_frequencies(profile, l_min: int, l_max: int, delta: int) -> dict:
    """Per-length ScoredMotif lists from a profile's frequent patterns.

    ``profile`` may be a server ``Profile`` or a plain ``{l: {pattern: freq}}``.
    """
    by_length = getattr(profile, "frequent_by_length", profile)
    out = {}
    for l in range(l_min, l_max + 1):
        freqs = by_length.get(l)
        if not freqs:
            continue
        cf = length_cf(freqs, delta)
        out[l] = [ScoredMotif(p, freqs[p], cf[p]) for p in sorted(freqs)]
    return out


def rank_key(m: ScoredMotif):
    return (-m.cf, -m.noisy_frequency, m.pattern)


def top_n(scored, n: int) -> list[ScoredMotif]:
    """Highest-cf motifs; ties go to higher noisy frequency, then lexicographic order."""
    if n < 1:
        raise ValueError("N must be >= 1")
    if isinstance(scored, dict):
        scored = [m for ms in scored.values() for m in ms]
    return sorted(scored, key=rank_key)[:n]
