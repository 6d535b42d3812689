"""Participant side: decompose merged queries, test local containment, answer noisily."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from dpflmd.candidates import MergedSequence, split_merged
from dpflmd.core import SequenceRecord
from dpflmd.ldp import NoiseFactor, randomize_bit, randomize_bits


class ProtocolError(RuntimeError):
    """A message violated the query/response contract."""


@dataclass(frozen=True)
class QueryMessage:
    round_length: int
    merged: tuple[MergedSequence, ...]
    eta: NoiseFactor

    def __post_init__(self):
        object.__setattr__(self, "merged", tuple(self.merged))
        for m in self.merged:
            if m.candidate_length != self.round_length:
                raise ProtocolError(
                    f"merged sequence {m.text!r} has length {m.candidate_length}, round is {self.round_length}"
                )

    @property
    def n_candidates(self) -> int:
        return sum(len(m.tail) for m in self.merged)

    def to_dict(self) -> dict:
        return {
            "round_length": self.round_length,
            "merged": [m.text for m in self.merged],
            "eta": self.eta.eta,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "QueryMessage":
        l = int(d["round_length"])
        return cls(l, tuple(MergedSequence(t, l) for t in d["merged"]), NoiseFactor(float(d["eta"])))


@dataclass(frozen=True)
class ResponseMessage:
    client_id: int
    bits: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"client_id": self.client_id, "bits": list(self.bits)}

    @classmethod
    def from_dict(cls, d: dict) -> "ResponseMessage":
        return cls(int(d["client_id"]), tuple(int(b) for b in d["bits"]))


def true_bits(data: str, merged, containment: str = "exact") -> list[int]:
    """Noise-free indicator per candidate, in canonical order.

    ``exact`` reports whether the full candidate is a contiguous substring.
    ``first-occurrence`` follows the literal prefix-position heuristic: locate
    the prefix's first occurrence and ask whether the final symbol appears
    anywhere after it.
    """
    bits: list[int] = []
    for m in merged:
        prefix = m.prefix
        cands = split_merged(m)
        start = data.find(prefix)
        if start < 0:
            # prefix absent: every sibling starts from a true 0
            bits.extend([0] * len(cands))
        elif containment == "exact":
            bits.extend(int(c in data) for c in cands)
        elif containment == "first-occurrence":
            rest = data[start + len(prefix) :]
            bits.extend(int(c[-1] in rest) for c in cands)
        else:
            raise ValueError(f"unknown containment mode {containment!r}")
    return bits


def answer_query(
    local: SequenceRecord,
    q: QueryMessage,
    rng: np.random.Generator,
    containment: str = "exact",
) -> ResponseMessage:
    if q.merged:
        tail = q.merged[0].tail
        if any(m.tail != tail for m in q.merged):
            raise ProtocolError("merged sequences disagree on the alphabet")
        stray = set(local.data) - set(tail)
        if stray:
            raise ProtocolError(
                f"client {local.client_id} holds symbols {sorted(stray)} outside query alphabet {tail!r}"
            )
    bits = true_bits(local.data, q.merged, containment)
    noisy = randomize_bits(bits, q.eta, rng)
    return ResponseMessage(local.client_id, tuple(int(b) for b in noisy))


def participant_response(local_view: str, pattern: str, eta, rng: np.random.Generator) -> int:
    if not pattern:
        raise ValueError("pattern must be non-empty")
    return randomize_bit(int(pattern in local_view), eta, rng)
